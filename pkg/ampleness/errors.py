# ampleness/errors.py
"""
Error types shared by the engine, the closed forms and the CLI.

Each error carries the process exit code the CLI uses for it:
  - InputError        -> 2  (bad parameters, bad Hodge data, bad cycle)
  - ConsistencyError  -> 3  (two computation paths disagree)
"""


class FlagcavError(Exception):
    exit_code: int = 1


class InputError(FlagcavError, ValueError):
    exit_code = 2


class ConsistencyError(FlagcavError, RuntimeError):
    exit_code = 3

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}
