"""Named constants shared across p3count.

Holds the size caps, the algorithm and suite names understood by the CLI, the
generator families of the ``gen:name:params`` mini-language and the local pattern
counts of the small stars removed by the structured algorithms.
"""

# --- Size caps ---
MASK_CAP = 128                 # bitset view of a Graph is kept only up to this many vertices
DEFAULT_ORACLE_CAP = 25        # largest graph the brute-force oracle will enumerate
DEFAULT_ENUMERATION_CAP = 30   # largest enumerated side for the exponential algorithms
THRESHOLD_WITNESS_CAP = 12     # forbidden-subgraph witnesses are searched up to this size
REDUCTION_ORACLE_LIMIT = 12    # reduction graphs larger than this are counted with noc_auto

# --- Extremal lab ranges ---
TREE_ENUMERATION_RANGE = (2, 9)
GRAPH_ENUMERATION_RANGE = (1, 7)
CONNECTED_EXHAUSTION_MAX = 6
WG_GAP_RANGE = (2, 8)

# --- Algorithms (count --algo) ---
ALGO_AUTO = "auto"
ALGO_ORACLE = "oracle"
ALGO_TREE = "tree"
ALGO_THRESHOLD = "threshold"
ALGO_GENERIC = "generic"
ALGO_STRUCTURED_A = "structured-A"
ALGO_STRUCTURED_B = "structured-B"
ALGO_STRUCTURED_C = "structured-C"
ALGO_KL = "kl"

ALGORITHMS = (
    ALGO_AUTO, ALGO_ORACLE, ALGO_TREE, ALGO_THRESHOLD, ALGO_GENERIC,
    ALGO_STRUCTURED_A, ALGO_STRUCTURED_B, ALGO_STRUCTURED_C, ALGO_KL,
)

# --- Phase 2 variants: leaves per removed star and its number of convex colorings ---
VARIANTS = ("A", "B", "C")
VARIANT_STAR_LEAVES = {"A": 3, "B": 4, "C": 5}
STAR_PATTERN_COUNTS = {3: 12, 4: 21, 5: 38}

# --- Verification suites (verify <suite>) ---
VERIFY_SUITES = (
    "reduction", "monotonicity", "spanning-tree", "extremal", "table1", "wg-gap",
    "patterns", "threshold", "trees",
)

# --- Generator families (gen:name:params) ---
GENERATOR_FAMILIES = {
    "path": "path:N",
    "cycle": "cycle:N",
    "star": "star:N",
    "complete": "complete:N",
    "edgeless": "edgeless:N",
    "bipartite": "bipartite:A:B (complete bipartite)",
    "prufer": "prufer:S1,S2,... (labeled tree from a Prufer sequence)",
    "threshold": "threshold:IUIU... (I = isolated, U = universal; first letter is the base vertex)",
    "gnp": "gnp:N:P (uses --seed)",
    "tree": "tree:N (random labeled tree, uses --seed)",
    "paw": "paw",
}

# --- Bench families ---
BENCH_FAMILIES = ("path", "cycle", "star", "complete", "gnp")

# --- noc(P_n) and noc(K_{1,n-1}) for n = 1..10 ---
TABLE1_PATHS = (2, 4, 7, 12, 21, 37, 65, 114, 200, 351)
TABLE1_STARS = (2, 4, 7, 12, 21, 38, 71, 136, 265, 522)

# --- UI Configuration ---
LABEL_JUST = 20
TIMER_JUST = 11

# --- Exit codes ---
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
