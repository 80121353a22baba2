from p3count import count_graph, graph_from_spec, noc_auto
from p3count.extremal_lab import table1_frame
from printpop import print_lime

print_lime("Test - Paths and Stars")
print(table1_frame(10).to_string(index=False))

print_lime("Test - Counts")
for spec in ("path:6", "star:6", "cycle:7", "paw", "threshold:IIUU", "edgeless:64"):
    print(f"{spec}:".ljust(20), noc_auto(graph_from_spec(spec)))

# result = count_graph(graph_from_spec("gnp:14:0.4", seed=7), "structured-C")
# print_lime("Result:", result.to_dict())

result = count_graph(graph_from_spec("cycle:12"), "generic")
print_lime("Generic C12:", result.noc, result.instrumentation)
