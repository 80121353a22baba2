"""SQLAlchemy ORM models for stored counting results.

Defines the schema for count runs, verification suite runs and bench rows. Counts
are stored as decimal strings because they outgrow SQLite integers.
"""

from sqlalchemy import Boolean, Column, DateTime, Float, Integer, String, Text
from sqlalchemy.orm import declarative_base

Base = declarative_base()


class CountRun(Base):
    """One ``count`` invocation.

    Attributes:
        count_run_id (int): Primary key.
        source (str): Edge-list file name or generator spec.
        n (int): Vertex count.
        m (int): Edge count.
        algo (str): Requested algorithm.
        noc (str): Exact count as a decimal string.
        instrumentation (str): JSON of the algorithm's counters.
        wall_time_ms (float): Wall time of the count.
        created_at (datetime): When the run finished.
    """

    __tablename__ = 'count_runs'

    count_run_id = Column(Integer, primary_key=True)
    source = Column(String, nullable=False)
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    algo = Column(String, nullable=False)
    noc = Column(Text, nullable=False)
    instrumentation = Column(Text)
    wall_time_ms = Column(Float)
    created_at = Column(DateTime)

    def __repr__(self):
        return (
            f"<CountRun(count_run_id={self.count_run_id}, "
            f"source='{self.source}', "
            f"n={self.n}, "
            f"m={self.m}, "
            f"algo='{self.algo}', "
            f"noc='{self.noc}')>"
        )


class VerificationRun(Base):
    """One ``verify`` suite run.

    Attributes:
        verification_run_id (int): Primary key.
        suite (str): Suite name.
        holds (bool): Whether every check passed.
        checked (int): Instances checked.
        violation_count (int): Failing instances.
        report (str): JSON of the full report.
        created_at (datetime): When the run finished.
    """

    __tablename__ = 'verification_runs'

    verification_run_id = Column(Integer, primary_key=True)
    suite = Column(String, nullable=False)
    holds = Column(Boolean, nullable=False)
    checked = Column(Integer)
    violation_count = Column(Integer)
    report = Column(Text)
    created_at = Column(DateTime)

    def __repr__(self):
        return (
            f"<VerificationRun(verification_run_id={self.verification_run_id}, "
            f"suite='{self.suite}', "
            f"holds={self.holds}, "
            f"checked={self.checked})>"
        )


class BenchRow(Base):
    """One row of a ``bench`` run.

    Attributes:
        bench_row_id (int): Primary key.
        family (str): Generator family.
        n (int): Vertex count.
        variant (str): Structured variant.
        colorings_enumerated (int): Composite colorings tried.
        wall_time_ms (float): Wall time.
        noc (str): Exact count as a decimal string.
    """

    __tablename__ = 'bench_rows'

    bench_row_id = Column(Integer, primary_key=True)
    family = Column(String, nullable=False)
    n = Column(Integer, nullable=False)
    variant = Column(String, nullable=False)
    colorings_enumerated = Column(Integer)
    wall_time_ms = Column(Float)
    noc = Column(Text)

    def __repr__(self):
        return (
            f"<BenchRow(bench_row_id={self.bench_row_id}, "
            f"family='{self.family}', "
            f"n={self.n}, "
            f"variant='{self.variant}', "
            f"colorings_enumerated={self.colorings_enumerated})>"
        )
