#!/usr/bin/env python3
"""Traces of Hecke operators on S_k(N, chi): eigenvalues of Delta, genus as a
trace, nebentypus examples with exact cyclotomic values."""

from hecketrace import (TraceQuery, delta_qexp, enumerate_characters, genus_x0,
                        trace_cusp, trace_form, trace_full, trivial_character)

print("tr(T_n, S_12(1)) recovers the Ramanujan tau function:")
triv1 = trivial_character(1)
taus = [trace_cusp(TraceQuery(1, 12, triv1, n)).as_integer() for n in range(1, 11)]
print("  engine:", taus)
print("  Delta :", [delta_qexp(10)[n] for n in range(1, 11)])

print("\ntr(T_1, S_2(N)) is the genus of X_0(N):")
row = [trace_cusp(TraceQuery(N, 2, trivial_character(N), 1)).as_integer()
       for N in range(1, 31)]
print("  trace:", row)
print("  genus:", [genus_x0(N) for N in range(1, 31)])

print("\nA nebentypus space with complex character values: N = 5, k = 3.")
chi = enumerate_characters(5)[1]          # order-4 character, odd
print(f"  character: exponents {list(chi.exponents)}, conductor {chi.conductor()},"
      f" parity {chi.parity()}")
for n in range(1, 9):
    val = trace_cusp(TraceQuery(5, 3, chi, n)).value
    print(f"  tr(T_{n}, S_3(5, chi)) = {val.to_json()}")

print("\nCombined trace on M_k + S_k needs no boundary conventions at all:")
for k in (4, 6, 12):
    ms = trace_full(TraceQuery(1, k, triv1, 1)).as_integer()
    s = trace_cusp(TraceQuery(1, k, triv1, 1)).as_integer()
    print(f"  k = {k:2d}: tr(M+S) = {ms}, dim S_k = {s}, dim E_k = {ms - 2 * s}")

print("\nTrace form of S_4(Gamma_0(8)) as a q-expansion:")
print(" ", trace_form("gamma0", 8, 4, 12).q_series_text())
