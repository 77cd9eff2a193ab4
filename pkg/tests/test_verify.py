from permlab import verify
from permlab.reference import REFERENCES


def test_reference_lookup():
    fine = REFERENCES["fine"]
    assert fine.at(1) == 0 and fine.through(4) == (0, 1, 2, 6)
    assert REFERENCES["A111576"].at(8) == 51


def test_selected_checks_pass():
    results = verify.run_suite(["stanton-rank-sequence", "fine-derangements", "symmetry-classes"])
    assert [r.name for r in results] == ["stanton-rank-sequence", "fine-derangements", "symmetry-classes"]
    assert all(r.passed for r in results)


def test_crash_is_reported_as_failure(monkeypatch):
    def boom():
        raise RuntimeError("broken")

    monkeypatch.setitem(verify.CHECKS, "stanton-rank-sequence", boom)
    (result,) = verify.run_suite(["stanton-rank-sequence"])
    assert not result.passed and "RuntimeError" in result.detail
