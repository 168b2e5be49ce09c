"""Python front end for the gnum library: every call returns the decoded JSON document."""

import json

from . import _core

__all__ = ["Error", "Session"]


class Error(Exception):
    """Raised for failed preconditions and malformed input; exit_code mirrors the CLI (1 or 2)."""

    def __init__(self, code, message, exit_code):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.exit_code = exit_code


class Session:
    def __init__(self, registry=None, precision=None):
        if registry is not None and not isinstance(registry, str):
            registry = json.dumps(registry)
        self._s = _call(_core.Session, registry, precision)

    def load_grid(self, grid):
        _call(self._s.load_grid, grid if isinstance(grid, str) else json.dumps(grid))

    def __getattr__(self, name):
        method = getattr(self._s, name)

        def run(*args, **kwargs):
            args = [json.dumps(a) if isinstance(a, dict) else a for a in args]
            kwargs = {k: json.dumps(v) if isinstance(v, dict) else v for k, v in kwargs.items()}
            return json.loads(_call(method, *args, **kwargs))

        return run


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.Error as e:
        raise Error(*e.args) from None
