"""Print the distinguished constants and a few reference values."""

import math

from rectmod import elliptic, modulus, psimu


def main():
    root = psimu.f8_root()
    rows = [
        ("psi(3 - 2 sqrt 2)", psimu.psi(psimu.R_UNIT)),
        ("K'/K at 3 - 2 sqrt 2", (lambda s: s.kc / s.k)(elliptic.EllipticState(psimu.R_UNIT))),
        ("f8 root", root),
        ("r0 = psi(f8 root)", psimu.psi(root)),
        ("argmax of comparison gap", modulus.comparison_gap_argmax()),
        ("max of comparison gap", modulus.comparison_gap(modulus.r0_constant())),
        ("M(Gamma_1)", modulus.exterior_modulus(1.0)),
        ("L(1)", modulus.modulus_bounds(1.0).lower),
        ("U(1)", modulus.modulus_bounds(1.0).upper),
        ("agm(1, 1/sqrt 2)", elliptic.agm(1.0, math.sqrt(0.5))),
        ("psi(1/2)", psimu.psi(0.5)),
        ("mu(1/2)", psimu.mu(0.5)),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {value:.16g}")


if __name__ == "__main__":
    main()
