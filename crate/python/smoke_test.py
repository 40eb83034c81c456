"""Smoke test for the `symsig` extension module.

Build and install it first, e.g.

    pip install maturin
    maturin build --release -m crates/py/Cargo.toml -o target/wheels
    pip install --force-reinstall target/wheels/symsig-*.whl
    python python/smoke_test.py
"""

from fractions import Fraction
from math import comb

import symsig


def check(cond, what):
    if not cond:
        raise AssertionError(what)
    print(f"ok  {what}")


def main():
    t = symsig.CyclicType(5, 2)
    check(str(t) == "1/5(1,2)" and repr(t) == "CyclicType(5, 2)", "type formatting")
    check(t == symsig.CyclicType(5, 2) and len({t, symsig.CyclicType(5, 2)}) == 1, "types compare and hash")
    check(t.staircase() == [(5, 0), (3, 1), (1, 2), (0, 5)], "staircase of 1/5(1,2)")
    check(symsig.syzygy_weights(5, 2) == [2, 2, 1], "syzygy weights of 1/5(1,2)")
    check(t.is_faithful(), "syzygy representation is faithful")

    for chi in range(5):
        check(symsig.exact_signature(5, 2, chi) == Fraction(1, 5), f"signature 1/5 for chi={chi}")

    total = sum(symsig.multiplicity(5, 2, chi, 7) for chi in range(5))
    check(total == comb(7 + 2, 2), "multiplicities partition Sym^7")

    series = symsig.ratio_series(2, 1, chi=0, n_max=4, grid=[4])
    n, num, den, ratio = series.entries[0]
    check((n, num, den, ratio) == (4, 9, 15, Fraction(3, 5)), "A1 partial ratio at N=4 is 3/5")
    check(series.target == Fraction(1, 2) and series.gap_at(4) == Fraction(1, 10), "A1 target and gap")

    big = t.ratio_series(n_max=800, grid=[800])
    check(abs(big.entries[0][3] - Fraction(1, 5)) <= Fraction(1, 100), "r_800 within 0.01 of 1/5")
    check(big.convergence()["final_gap"] == big.gap_at(800), "convergence report")

    value, _ = symsig.general_signature([2, 2], [[1, 0], [0, 1]], chi=[1, 1], n_max=20)
    check(value == Fraction(1, 4), "Klein four group signature 1/4")

    rep = symsig.DiagonalRepresentation([4], [[2]])
    check(rep.kernel_element() == [2] and not rep.is_faithful(), "non-faithful kernel element")
    try:
        rep.signature()
    except ValueError as e:
        check("not faithful" in str(e), "non-faithful signature raises ValueError")
    else:
        raise AssertionError("expected ValueError")

    try:
        symsig.CyclicType(4, 2)
    except ValueError as e:
        check("a and n must be coprime" in str(e), "non-coprime type raises ValueError")
    else:
        raise AssertionError("expected ValueError")

    u, d, v = symsig.smith_normal_form([[2, 4], [6, 8]])
    check([d[0][0], d[1][1]] == [2, 4] and d[0][1] == d[1][0] == 0, "Smith form of [[2,4],[6,8]]")

    report = symsig.verify(8)
    check(report["passed"], "oracle cross-check up to n=8")
    print("all smoke checks passed")


if __name__ == "__main__":
    main()
