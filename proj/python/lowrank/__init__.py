"""Exact construction, verification and classification of rank-2 and rank-3 algebras."""

import json

from ._core import DomainError, InputError, run

__all__ = ["CommandError", "DomainError", "InputError", "call", "census", "classify_case", "run",
           "validate_relations"]


class CommandError(Exception):
    """A command exited nonzero; `code` and the decoded `error` JSON are kept."""

    def __init__(self, code, error):
        super().__init__(error.get("message", "command failed"))
        self.code = code
        self.error = error


def call(*command, doc=None, **flags):
    """Run a command such as call("cubic", "verify", doc={...}) and decode its JSON output."""
    args = list(command)
    if doc is not None:
        args.append(json.dumps(doc))
    for name, value in flags.items():
        flag = "--" + name.replace("_", "-")
        if value is True:
            args.append(flag)
        elif value is not False and value is not None:
            args += [flag, value if isinstance(value, str) else json.dumps(value)]
    code, out, err = run(args)
    if code != 0:
        raise CommandError(code, json.loads(err))
    return json.loads(out)


def validate_relations(coefficients):
    """(valid, violated relation names) for a dict with ring and b, c, m, n, y, z."""
    from . import _core

    valid, violated = _core.validate_relations(json.dumps(coefficients))
    return valid, list(violated)


def classify_case(coefficients):
    from . import _core

    return _core.classify_case(json.dumps(coefficients))


def census(p):
    from . import _core

    return json.loads(_core.census(p))
