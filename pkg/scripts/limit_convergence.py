"""How fast do the endpoint limits converge?

For each limit claim, print |f(x) - limit| at distances 1e-2 ... 1e-12 from
the endpoint. The slow ones decay like sqrt(d), r'^c log(1/r') or 1/log r
(d the distance, r' ~ sqrt(2d) near 1), so a 1e-3 agreement at d = 1e-6 is
out of reach for them.
"""

import math

from rectmod import modulus, verify

OFFSETS = [10.0 ** -k for k in range(2, 13, 2)]

SLOW = {
    "thm1.2-limit-0": (verify._growth_ratio, 0, math.pi),
    "lemma2.3-2-c0.5-limit-1": (verify._rc_power_k(0.5), 1, 0.0),
    "lemma2.3-2-c1-limit-1": (verify._rc_power_k(1), 1, 0.0),
    "lemma2.4-f5-limit-1": (verify._f5, 1, 1.0),
    "lemma2.4-f8-limit-0": (verify._f8, 0, 0.0),
}


def main():
    print("claim".ljust(26) + "".join(f"{d:>11.0e}" for d in OFFSETS))
    for cid, (fn, end, value) in SLOW.items():
        xs = [d if end == 0 else 1.0 - d for d in OFFSETS]
        print(cid.ljust(26) + "".join(f"{abs(fn(x) - value):>11.2e}" for x in xs))
    print()
    print("comparison gap f(r) = mu(psi^-1(r))/pi - 1/r  and  f(r) log(4 sqrt r)")
    for k in range(2, 9):
        r = 10.0 ** k
        g = modulus.comparison_gap(r)
        print(f"  r=1e{k}:  {g:.6f}   {g * math.log(4 * math.sqrt(r)):.6f}")
    print("  the second column tends to pi/2; f(r) < 1e-2 needs log r of order 300")


if __name__ == "__main__":
    main()
