#!/usr/bin/env python3
"""Hurwitz class numbers: reduced forms, the extension to all integers, and
the identities that pin the conventions down."""

from hecketrace import (hurwitz_class_number, inversion_check,
                        kronecker_hurwitz_check, primitive_hurwitz,
                        reduced_forms)

print("Reduced positive definite forms of small discriminant:")
for D in (-3, -4, -12, -23, -47):
    forms = reduced_forms(D)
    print(f"  D = {D:4d}: {list(forms)}")

print("\nH(D) extends the weighted form count to every integer:")
for D in (0, 3, 4, 7, 12, 16, -1, -9, 5):
    print(f"  H({D:3d}) = {hurwitz_class_number(D)}")

print("\nh0(D) = 2h(D)/w(D) with the parallel extension:")
for D in (0, -3, -4, -7, -12, 1, 4, 9):
    print(f"  h0({D:3d}) = {primitive_hurwitz(D)}")

print("\nThe two are Moebius inverses over square divisors; checking |D| <= 2000:")
report = inversion_check(2000)
print(" ", report.summary())

print("\nKronecker-Hurwitz: sum_t H(4n - t^2) = sigma_1(n).")
print("  The sign H(-u^2) = -u/2 is forced; n = 2 would fail with +u/2:")
for n in (1, 2, 3, 6, 100):
    print(f"  n = {n:3d}: {'holds' if kronecker_hurwitz_check(n) else 'FAILS'}")
