#!/usr/bin/env python3
"""Smoke test for the knot11_py extension module.

Builds nothing itself: run `cargo build --release -p knot11-py` first.
The compiled cdylib is loaded straight from the target directory.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libknot11_py.so",
        root / "target" / "debug" / "libknot11_py.so",
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit("build the bindings first: cargo build --release -p knot11-py")
    stage = Path(tempfile.mkdtemp(prefix="knot11-py-"))
    shutil.copy(lib, stage / "knot11_py.so")
    sys.path.insert(0, str(stage))
    import knot11_py

    return knot11_py


def main():
    m = load_module()

    assert m.family_params(0) == (31, 12, 6, 18)
    assert m.family_params(1) == (95, 36, 22, 50)

    bottom, top, through = m.decode_params(31, 12, 6, 18)
    assert bottom[0] == (1, 24) and bottom[-1] == (12, 13)
    assert top[0] == (8, 31) and top[-1] == (19, 20)
    assert len(through) == 7

    cycle = m.beta_cycle_params(5, 2, 0, 4)
    assert [slot for slot, _ in cycle] == [1, 4, 3, 2, 5]

    report = json.loads(m.compute_family(0))
    assert report["tau"] == 1
    assert report["seifert_genus"] == 2
    assert report["generator_count"] == 31
    assert report["verdicts"]["conway_trivial"] is True
    assert report["verdicts"]["smoothly_slice_obstructed"] is True
    assert report["alexander"] == {"0": 1}

    unknot = json.loads(m.compute_params(1, 0, 0, 0))
    assert unknot["tau"] == 0
    assert unknot["generators"] == [[1, 0, 0]]

    five = json.loads(m.compute_matchings(
        [(1, 4), (2, 3)], [(2, 5), (3, 4)], [(5, 1)]))
    assert five["generator_count"] == 5
    assert sum(five["alexander"].values()) == 1

    try:
        m.compute_params(31, 12, 6, 17)
    except ValueError:
        pass
    else:
        sys.exit("offset out of range must raise ValueError")

    svg = m.render_params(31, 12, 6, 18)
    assert svg.startswith("<svg")

    checks = m.verify_reference(0)
    failed = [name for name, ok, _ in checks if not ok]
    assert not failed, f"reference checks failed: {failed}"

    print(f"smoke test passed ({len(checks)} reference checks)")


if __name__ == "__main__":
    main()
