"""Min-plus polynomials as piecewise-linear functions.

Starts from x^2 ⊕ 2⊗x ⊕ 6, whose graph is three line pieces with
breakpoints at x = 2 and x = 4 (so its roots are 2 and 4), then shows how
canonicalization pulls an arbitrary coefficient sequence down onto its
lower convex hull without changing the function.

Run:  python demos/polynomial_factorization.py
"""

from minplus import (
    MinPlusPolynomial,
    MinPlusValue,
    breakpoints,
    canonicalize,
    evaluate,
    expand,
    factorize,
    format_factorization,
    format_polynomial,
    is_equivalent,
)


def show(p, label):
    print(f"{label}: {format_polynomial(p)}")
    print(f"  coefficients: {' '.join(str(c) for c in p.coeffs)}")


def main():
    quad = MinPlusPolynomial([0, 2, 6])
    show(quad, "p")
    for x in (0, 2, 3, 4, 6):
        print(f"  p({x}) = {evaluate(quad, x)}")
    print("  breakpoints (x, y, slope_left, slope_right):")
    for bp in breakpoints(quad):
        print(f"    {bp}")
    print(f"  factorization: {format_factorization(factorize(quad))}")

    print()
    messy = MinPlusPolynomial([0, 3, 8, 6, 20, None, None, None])
    show(messy, "q (coefficients off the hull, ε tail)")
    canon = canonicalize(messy)
    show(canon, "canonical form of q")
    print(f"  same function: {is_equivalent(messy, canon)}")
    print(f"  factorization: {format_factorization(factorize(messy))}")
    print("  the three trailing ε coefficients become the x^3 factor")

    print()
    f = factorize(messy)
    back = expand(f)
    show(back, "expand(factorize(q))")
    print(f"  equals canonical form: {back == canon}")

    print()
    a = MinPlusPolynomial([0, 0, 0])
    b = MinPlusPolynomial([0, 1, 0])
    print(f"r = {format_polynomial(a)} and s = {format_polynomial(b)}")
    print(f"  equivalent: {is_equivalent(a, b)} "
          "(the 1⊗x term is never the minimum, so the functions coincide)")

    print()
    half = MinPlusValue("1/2")
    p = MinPlusPolynomial([0, half, "7/2", None, 9])
    show(p, "t (rational coefficients, ε gap)")
    print(f"  factorization: {format_factorization(factorize(p))}")


if __name__ == "__main__":
    main()
