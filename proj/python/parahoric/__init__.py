"""Formal connections over parahoric level structures."""

import json
from fractions import Fraction

from . import _parahoric

__version__ = _parahoric.__version__

__all__ = ["ParahoricError", "run", "reduce", "slope", "regular", "borel", "verify", "canonical_job", "replay"]


class ParahoricError(RuntimeError):
    def __init__(self, exit_code, report):
        err = report.get("error", {})
        super().__init__(f"{err.get('kind', 'failure')}: {err.get('message', '')}")
        self.exit_code = exit_code
        self.kind = err.get("kind")
        self.report = report


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def run(command, job, *, truncation=None, max_ramification=None, budget_iterations=None, higgs=False, report=None):
    """Returns (exit_code, report dict) exactly as the command line tool would."""
    code, text = _parahoric.run(
        command,
        _text(job),
        truncation=truncation,
        max_ramification=max_ramification,
        budget_iterations=budget_iterations,
        higgs=higgs,
        report="" if report is None else _text(report),
    )
    return code, json.loads(text)


def _checked(command, job, **kw):
    code, rep = run(command, job, **kw)
    if code != 0:
        raise ParahoricError(code, rep)
    return rep


def reduce(job, **kw):
    return _checked("reduce", job, **kw)


def slope(job, **kw):
    return Fraction(_checked("slope", job, **kw)["slope"])


def regular(job, **kw):
    return _checked("regular", job, **kw)["regular"]


def borel(job, **kw):
    return _checked("borel", job, **kw)


def verify(job, report):
    code, _ = run("verify", job, report=report)
    return code == 0


def canonical_job(job):
    return _parahoric.canonical_job(_text(job))


def replay(job, certificate):
    return json.loads(_parahoric.replay(_text(job), _text(certificate)))
