import pytest

import szlenk
from szlenk import Ordinal, w


def test_arithmetic():
    assert str(parse := szlenk.parse("w^(w^2)*3 + w*5 + 7")) == "w^(w^2)*3 + w*5 + 7"
    assert parse > w
    assert 1 + w == w
    assert 2 * w == w
    assert (w + 1) * w == w**2
    assert str((w + 1) ** 2) == "w^2 + w + 1"
    assert Ordinal("W1") * w == szlenk.parse("w^(W1 + 1)")
    assert int(Ordinal(7) + 3) == 10
    q, r = szlenk.left_divmod("w^2*3 + w + 4", w)
    assert (str(q), str(r)) == ("w*3 + 1", "4")
    assert szlenk.left_difference(w, "w*2 + 1") == "w + 1"


def test_indices():
    assert szlenk.szlenk_index("w^(w^2)") == "w^3"
    assert szlenk.dentability_index(w) == "w^2"
    assert szlenk.gamma("w^(w^w)") == w
    assert szlenk.isomorphic(w, "w*2")
    assert not szlenk.isomorphic(w, "w^w")
    assert szlenk.canonical_representative("w^(w*3 + 1)*2") == "w^w"
    assert szlenk.cb_height("w^(w^2)") == "w^2 + 1"
    assert szlenk.cb_quotient("w^2*3 + w*2 + 5", 1) == "w*3 + 2"
    assert szlenk.dirac_rank("w^3 + w^2*2") == 2


def test_spaces():
    out = szlenk.normalize("C0(w^(w*3))")
    assert str(out["result"]) == "c0(w^w, C0(w^w))"
    assert [s["rule"] for s in out["steps"]] == ["R1", "R1", "R2", "R3", "R2"]
    assert out["verified"]
    assert str(szlenk.decompose("w^2", w)) == "C0(w) (+) c0(w, C0(w^2))"
    lower, upper, exact = szlenk.bounds("c0(w^w, C0(w))")
    assert (str(lower), str(upper), exact) == ("w", "w^2", False)


def test_errors():
    with pytest.raises(szlenk.ParseError):
        szlenk.parse("w^^2")
    with pytest.raises(szlenk.DomainError):
        szlenk.gamma(5)
    with pytest.raises(szlenk.DomainError):
        szlenk.isomorphic(w, "W1")
    with pytest.raises(OverflowError):
        szlenk.parse("18446744073709551616")
    with pytest.raises(ValueError):
        Ordinal(-1)
