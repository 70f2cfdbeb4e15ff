"""Builds the extension with cargo, imports it and checks a few values.

    python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "minrank-py"], cwd=ROOT, check=True
    )
    lib = os.path.join(ROOT, "target", "release", "libminrank.so")
    out = tempfile.mkdtemp(prefix="minrank-py-")
    shutil.copy(lib, os.path.join(out, "minrank.so"))
    sys.path.insert(0, out)


def main():
    build()
    import minrank

    assert minrank.classify(3, 3, 1, 4) == "well-defined"
    assert minrank.classify(3, 3, 1, 3) == "over-determined"
    assert minrank.bound_square(3, 1) == 3
    assert minrank.bound_linear(4, 2) == 5
    assert minrank.bound_degd(3, 3, 1, 2) == 9
    mixed = [[1, 2, 2], [1, 2, 2], [2, 3, 3]]
    assert minrank.bound_main(1, mixed) == 9
    assert minrank.regularity(1, mixed) == 9
    try:
        minrank.bound_main(1, [[1, 1], [1, 2]])
    except ValueError as e:
        assert "additivity" in str(e)
    else:
        raise AssertionError("non-additive grid accepted")

    rep = minrank.bound_report(3, 3, 1, 4, degree=2)
    assert rep["bound_main"] == 9 and rep["classification"] == "well-defined"

    inst = minrank.Instance.generate(3, 3, 1, 4, p=101, seed=7)
    assert len(inst.minors()) == 9
    again = minrank.Instance.from_json(inst.to_json())
    assert again.to_json() == inst.to_json()
    solved = inst.solve()
    assert solved["report"]["measured_solvdeg"] <= 3
    assert solved["report"]["bound_respected"] is True
    assert solved["report"]["oracle_agrees"] is True

    small = minrank.Instance.classical([[[1, 2], [3, 4]]], r=1, p=5)
    assert small.minors() == ["3*x1^2"]
    brute = small.bruteforce()
    assert brute["agrees"] and brute["solutions"] == [[0]]

    bad = minrank.Instance.generalized([["x1 + 1", "x1"], ["x1", "x1 + 2"]], r=1, k=1)
    try:
        bad.solve()
    except RuntimeError as e:
        assert "rows [1, 2]" in str(e)
    else:
        raise AssertionError("homogenization failure not reported")

    out = minrank.run_experiment(
        {"cells": [{"kind": "classical", "m": 3, "n": 3, "r": 1, "k": 4, "p": 101}], "trials": 3}
    )
    assert len(out["rows"]) == 3 and out["summary"][0]["violations"] == 0

    print("python smoke test passed:", repr(inst))


if __name__ == "__main__":
    main()
