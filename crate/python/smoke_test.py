"""Smoke test for the recurlab extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`
or `pip install crates/python`, then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import recurlab


def main():
    table = recurlab.difference_table([1, 2, 4, 8, 16, 31])
    assert table["next"] == 57
    assert table["constant_depth"] == 4

    rec = recurlab.infer_recurrence([1, 2, 4, 8, 16, 31])
    assert str(rec) == "a(n+4) - 4a(n+3) + 6a(n+2) - 4a(n+1) + a(n) = 1"
    assert rec.coefficients == [1, -4, 6, -4, 1]

    charpoly = rec.solve("charpoly")
    genfunc = rec.solve("genfunc")
    assert charpoly.same_function(genfunc)
    assert charpoly.polynomial() == [1, Fraction(14, 24), Fraction(11, 24), Fraction(-2, 24), Fraction(1, 24)]
    f = charpoly.in_moser_variable()
    assert f.text == "(m^4 - 6m^3 + 23m^2 - 18m + 24)/24"
    assert [f(m) for m in range(1, 8)] == [1, 2, 4, 8, 16, 31, 57]
    assert rec.partial_fractions() == [(1, 5, 1), (1, 4, -3), (1, 3, 4), (1, 2, -2), (1, 1, 1)]

    for method in ("binomial", "polynomial", "sum", "euler"):
        assert recurlab.regions(6, method) == 31

    assert recurlab.count_regions(6)["regions"] == 31
    hexagon = recurlab.count_regions(6, params=recurlab.hexagon_params())
    assert hexagon["regions"] == 30 and not hexagon["general_position"]
    assert recurlab.verify_geometric(7, trials=3)["counts"] == [57, 57, 57]

    fib = recurlab.fit_homogeneous([1, 1, 2, 3, 5, 8])
    try:
        fib.solve()
    except recurlab.UnsupportedError as e:
        assert "x^2 - x - 1" in str(e)
    else:
        raise AssertionError("Fibonacci should have irrational roots")

    try:
        recurlab.predict_next([0.5, 1.0])
    except TypeError:
        pass
    else:
        raise AssertionError("floats should be rejected")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
