"""Provides access to the results SQLite database.

Initializes the database engine, creates the tables if the database file is missing,
and stores count runs, verification reports and bench rows using SQLAlchemy.

Classes:
    ResultsDatabase: Manages connection, initialization and inserts for a results db file.
"""

import json
import os
from datetime import datetime

# SQLAlchemy imports
from sqlalchemy import create_engine
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import sessionmaker

# Local imports
from p3count.constants import LABEL_JUST
from p3count.results_db.results_models import Base, BenchRow, CountRun, VerificationRun

# IO and console output
from printpop import print_cyan, print_orange, print_red


class ResultsDatabase:
    """Handles access to a results SQLite database.

    Attributes:
        DEFAULT_DB_PATH (str): Default database file, relative to the working directory.
        LABEL_JUST (int): Padding for console output labels.
        engine (Engine): SQLAlchemy engine instance.
        db_absolute_path (str): Absolute path to the database file.
    """

    DEFAULT_DB_PATH = 'p3count_results.db'
    LABEL_JUST = LABEL_JUST

    engine = None
    db_absolute_path = None

    def __init__(self, db_path: str = None):
        """Opens ``db_path``, creating the file and its tables when missing.

        Args:
            db_path (str, optional): Database file. If None, uses ``DEFAULT_DB_PATH``.
        """
        if db_path is None:
            db_path = self.DEFAULT_DB_PATH
        try:
            self.db_absolute_path = os.path.normpath(os.path.abspath(db_path))

            create_tables = False
            if not os.path.exists(self.db_absolute_path):
                print("Warning:".ljust(self.LABEL_JUST), end="", flush=True)
                print_orange("Database file not found at: ", end="", flush=True)
                print_cyan(f"'{self.db_absolute_path}'", flush=True)
                create_tables = True

            self.engine = create_engine(f"sqlite:///{self.db_absolute_path}")

            if create_tables:
                Base.metadata.create_all(self.engine)
                print("Warning:".ljust(self.LABEL_JUST), end="", flush=True)
                print_orange("Database file created at: ", end="", flush=True)
                print_cyan(f"'{self.db_absolute_path}'", flush=True)
            else:
                # tables missing from an existing file are added, existing ones are left alone
                Base.metadata.create_all(self.engine)

        except SQLAlchemyError as sae:
            print_red(f"SQLAlchemyError occurred in ResultsDatabase: {sae}")
        except Exception as e:
            print_red(f"Unexpected error in ResultsDatabase: {type(e).__name__}: {e}")

    def _add(self, record, where: str):
        session = None
        try:
            Session = sessionmaker(bind=self.engine)
            with Session() as session:
                session.add(record)
                session.commit()
                session.refresh(record)
                return record
        except (TypeError, ValueError) as model_error:
            print_red(f"ValueError in {where}(): {model_error}")
        except SQLAlchemyError as db_error:
            print_red(f"SQLAlchemyError in {where}(): {db_error}")
        except Exception as e:
            print_red(f"Unexpected error in {where}(): {type(e).__name__}: {e}")
        if session:
            session.rollback()
        return None

    def add_count_run(self, source: str, result):
        """Stores a ``CountResult``.

        Returns:
            CountRun: The stored record, or None if storing failed.
        """
        payload = result.to_dict()
        return self._add(CountRun(
            source=source,
            n=result.n,
            m=result.m,
            algo=result.algo,
            noc=str(result.noc),
            instrumentation=json.dumps(payload["instrumentation"]),
            wall_time_ms=result.elapsed_ms,
            created_at=datetime.now(),
        ), "add_count_run")

    def add_verification_run(self, report):
        """Stores a ``LabReport``.

        Returns:
            VerificationRun: The stored record, or None if storing failed.
        """
        return self._add(VerificationRun(
            suite=report.suite,
            holds=report.holds,
            checked=report.checked,
            violation_count=report.violation_count,
            report=json.dumps(report.to_dict()),
            created_at=datetime.now(),
        ), "add_verification_run")

    def add_bench_rows(self, frame) -> bool:
        """Stores every row of a bench DataFrame.

        Returns:
            bool: True if successful, False otherwise.
        """
        session = None
        try:
            Session = sessionmaker(bind=self.engine)
            with Session() as session:
                for row in frame.to_dict(orient="records"):
                    session.add(BenchRow(
                        family=row["family"],
                        n=int(row["n"]),
                        variant=row["variant"],
                        colorings_enumerated=int(row["colorings_enumerated"]),
                        wall_time_ms=float(row["wall_time_ms"]),
                        noc=str(row["noc"]),
                    ))
                session.commit()
                return True
        except (TypeError, ValueError) as model_error:
            print_red(f"ValueError in add_bench_rows(): {model_error}")
        except SQLAlchemyError as db_error:
            print_red(f"SQLAlchemyError in add_bench_rows(): {db_error}")
        except Exception as e:
            print_red(f"Unexpected error in add_bench_rows(): {type(e).__name__}: {e}")
        if session:
            session.rollback()
        return False

    def get_count_runs(self, algo: str = None):
        """Retrieves stored count runs, optionally only those of ``algo``.

        Returns:
            List[CountRun]: Matching records, or an empty list.
        """
        try:
            Session = sessionmaker(bind=self.engine)
            with Session() as session:
                query = session.query(CountRun)
                if algo:
                    query = query.filter(CountRun.algo == algo)
                return query.all()
        except SQLAlchemyError as db_error:
            print_red(f"SQLAlchemyError in get_count_runs(): {db_error}")
        except Exception as e:
            print_red(f"Unexpected error in get_count_runs(): {type(e).__name__}: {e}")
        return []

    def get_verification_runs(self, suite: str = None):
        """Retrieves stored verification runs, optionally only those of ``suite``."""
        try:
            Session = sessionmaker(bind=self.engine)
            with Session() as session:
                query = session.query(VerificationRun)
                if suite:
                    query = query.filter(VerificationRun.suite == suite)
                return query.all()
        except SQLAlchemyError as db_error:
            print_red(f"SQLAlchemyError in get_verification_runs(): {db_error}")
        except Exception as e:
            print_red(f"Unexpected error in get_verification_runs(): {type(e).__name__}: {e}")
        return []

    def get_bench_rows(self, family: str = None):
        """Retrieves stored bench rows, optionally only those of ``family``."""
        try:
            Session = sessionmaker(bind=self.engine)
            with Session() as session:
                query = session.query(BenchRow)
                if family:
                    query = query.filter(BenchRow.family == family)
                return query.all()
        except SQLAlchemyError as db_error:
            print_red(f"SQLAlchemyError in get_bench_rows(): {db_error}")
        except Exception as e:
            print_red(f"Unexpected error in get_bench_rows(): {type(e).__name__}: {e}")
        return []
