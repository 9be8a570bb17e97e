from __future__ import annotations

import pytest

from kindep.verify import (
    Theorem,
    theorem3_fs_displayed,
    theorem3_fs_polynomial,
    verify_theorem,
)


@pytest.mark.parametrize("tag, params", [
    ("thm1", {"n": 5}),
    ("thm2", {"n": 5}),
    ("thm4", {"max_n": 6}),
    ("thm5", {"k": 3, "l": 3, "n": 13}),
    ("lemma4", {"trials": 50, "max_n": 8, "seed": 1}),
])
def test_verifiers_pass(tag, params):
    rep = verify_theorem(tag, **params)
    assert rep.passed, rep.render(verbose=True)
    assert rep.to_dict()["passed"] is True


def test_thm3_reports_known_discrepancies():
    rep = verify_theorem(Theorem.THM3, ns=[5, 6])
    failed = {c.name for c in rep.failures()}
    assert failed == {"LS n=6 k=3 construction",
                      "FS a=2 b=1 displayed x^3 coefficient",
                      "FS a=3 b=1 displayed x^3 coefficient"}
    assert "FAIL" in rep.render()


def test_fs_forms():
    assert theorem3_fs_displayed(3, 1)[3] == 2
    assert theorem3_fs_polynomial(3, 1)[3] == 9
    assert theorem3_fs_polynomial(2, 1)[3] == 4


def test_unknown_tag():
    with pytest.raises(ValueError):
        verify_theorem("thm9")
