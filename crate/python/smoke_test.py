"""Smoke test for the skewcat extension module.

Install with `pip install -e crates/py --no-build-isolation`, then run
`python3 python/smoke_test.py`.
"""

import json

import skewcat


def fixture(name):
    return skewcat.fixture(name)


def main():
    names = skewcat.fixture_names()
    assert "strict Z/2" in names, names

    report = json.loads(skewcat.check_skew_moncat(fixture("strict Z/2")))
    failed = [e["name"] for e in report["entries"] if e["status"] == "fail"]
    assert not failed, failed

    ch3 = json.dumps(json.loads(fixture("skew Ch3"))["category"])
    monads = skewcat.mw_enumerate(ch3)
    assert len(monads) == 4, len(monads)
    for m in monads:
        kleisli = skewcat.kleisli(m)
        assert json.loads(skewcat.check_category(kleisli))["ok"]

    try:
        skewcat.check_category('{"objects": ["a"], "morphisms": [["i", "a", 7]]}')
    except ValueError as e:
        assert "morphisms" in str(e), e
    else:
        raise AssertionError("malformed input accepted")

    print(f"skewcat {skewcat.__version__}: ok ({len(names)} fixtures, {len(monads)} mw-monads on ch3)")


if __name__ == "__main__":
    main()
