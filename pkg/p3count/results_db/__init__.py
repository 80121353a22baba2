# results_db/__init__.py
#
# """
# Manages connection and initialization of the results database file
# """

from p3count.results_db.results_database import ResultsDatabase
from p3count.results_db.results_models import Base, BenchRow, CountRun, VerificationRun
