"""Exact traces of Hecke and Atkin-Lehner operators on modular forms.

Class-number trace formulas for Gamma_0(N) with nebentypus and Gamma_1(N),
trace-form q-expansions, and a self-checking oracle suite.  All arithmetic is
exact: Fractions, big integers and cyclotomic numbers; no floats anywhere in a
computation.
"""

from .arith import (crt_solve, divisors, euler_phi, factor, gegenbauer,
                    index_gamma0, isqrt_exact, kronecker, mobius, sigma1_coprime)
from .atkin_lehner import ALQuery, al_cusp_sum, discriminant_weight, trace_tn_wl
from .characters import (DirichletCharacter, UnitGroup, enumerate_characters,
                         product_character, trivial_character, unit_group)
from .classnum import (class_number, hurwitz_class_number, inversion_check,
                       kronecker_hurwitz_check, primitive_hurwitz, reduced_forms,
                       unit_count)
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .gamma0 import (IntegralityError, TraceQuery, TraceResult, char_weight,
                     char_weight_mobius, cusp_sum, square_boundary_term,
                     trace_cusp, trace_full, unit_solutions)
from .gamma1 import (gamma1_cusp_sum, gamma1_weight, gamma1_weight_mobius,
                     stable_ratio_check, trace_cusp_gamma1, trace_cusp_stable,
                     trace_full_gamma1, trace_full_stable)
from .level4 import (relation_table_check, trace_even_index,
                     trace_even_weight_odd_index, trace_form, trace_level4,
                     trace_odd_weight_odd_index)
from .oracles import (consistency_suite, delta_qexp, eigenform_qexp,
                      eisenstein_qexp, genus_x0)
from .qexp import QExpansion
from .report import CheckReport

__version__ = "0.1.0"
