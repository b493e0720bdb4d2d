"""Walk through a conditional expectation computation by hand.

Builds the span of {u_g f_g u_v} at the smallest interesting truncation,
projects the coordinate-swap unitary onto it, and compares the result
with the closed form u_s·f_s.  Run with:  python3 demos/expectation_walkthrough.py
"""

from isrlab.algebra import unit
from isrlab.expectation import character_of, conditional_expectation
from isrlab.f2 import F2Matrix, rank_defect
from isrlab.groups import Affine, enumerate_group
from isrlab.projections import make_f
from isrlab.zoo import build_mexo


def main():
    spec = build_mexo(2)
    print(f"spec {spec.label}: {len(spec.basis)} spanning elements, "
          f"window of {len(spec.window)} group elements")

    s = Affine.matrix(F2Matrix.swap(1, 2))
    rep = conditional_expectation(unit(s), spec)
    print(f"\nE(u_s) for the coordinate swap s:")
    print(f"  {rep.output!r}")
    print(f"  closed form u_s f_s: {unit(s) * make_f(F2Matrix.swap(1, 2))!r}")
    print(f"  residual norm^2: {rep.residual_norm_sq}")
    print(f"  matrix coefficient tau(s^-1 E(s)): {rep.character_value}")

    print("\nexpectation character vs 2^{-rank(g-I)} over the whole truncation:")
    from fractions import Fraction

    pool = enumerate_group("affine", 2)
    matches = sum(
        character_of(spec, x) == Fraction(1, 1 << rank_defect(x.g)) for x in pool
    )
    print(f"  {matches}/{len(pool)} elements match the rank formula")


if __name__ == "__main__":
    main()
