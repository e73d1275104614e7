import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import parahoric

JOBS = Path(os.environ.get("PARAHORIC_JOBS_DIR", Path(__file__).resolve().parents[2] / "jobs"))


def job(name):
    return json.loads((JOBS / name).read_text())


COMPANION = {
    "n": 2,
    "truncation": 12,
    "weight": ["0", "0"],
    "connection": [[[], [[0, "1"]]], [[[-3, "1"]], []]],
}


def test_version():
    assert parahoric.__version__ == "0.1.0"


def test_slope_of_companion():
    assert parahoric.slope(COMPANION) == Fraction(1, 2)


def test_reduce_verifies():
    rep = parahoric.reduce(job("gl3_nilpotent.json"))
    assert rep["form_class"] in ("logarithmic", "cartan_irregular")
    assert parahoric.verify(job("gl3_nilpotent.json"), rep)
    rep["output"]["cover"] = rep["output"]["cover"] + 1
    assert not parahoric.verify(job("gl3_nilpotent.json"), rep)


def test_replay_matches_output():
    rep = parahoric.reduce(job("nilpotent_e21.json"))
    out = parahoric.replay(job("nilpotent_e21.json"), rep["certificate"])
    assert out["cover"] == rep["output"]["cover"]
    assert out["entries"] == rep["output"]["entries"]


def test_regular_and_borel():
    assert parahoric.regular(job("nilpotent_e21.json"))
    assert not parahoric.regular(job("diag_irregular.json"))
    rep = parahoric.borel(job("diag_irregular.json"))
    assert rep["order"] == 3


def test_errors_carry_kind_and_exit_code():
    with pytest.raises(parahoric.ParahoricError) as info:
        parahoric.reduce(job("iwahori_gl2.json"))
    assert info.value.exit_code == 2
    assert info.value.kind == "NotIntegerWeight"
    code, rep = parahoric.run("reduce", "{")
    assert code == 2 and rep["error"]["kind"] == "ParseError"


def test_canonical_job_is_stable():
    once = parahoric.canonical_job(COMPANION)
    assert parahoric.canonical_job(once) == once
    with pytest.raises(ValueError):
        parahoric.canonical_job({"n": 2})
