"""Executable largeness notions for subsets of N, Z and their squares.

Exact integer sets, polynomial fibers ``{(m, n) : m + p_i(n) in A}``,
bounded witness searches for the IP, Delta, thick and syndetic families,
and replayable counterexample constructions.
"""

__version__ = "0.1.0"

from .errors import (BoundsError, BudgetExceeded, DomainError, LargenessError, ParseError,
                     PreconditionError)
from .polynomials import (IntPolynomial, Polynomial, choose_shift_exponent, derivative,
                          eval_poly, monotone_threshold, parse_poly)
from .sets import (INTEGERS, NATURALS, Complement, ConstructionBacked, ExplicitSorted,
                   GapProfile, IntervalUnion, SetDescriptor, Universe, Window1D,
                   descriptor_from_json, enumerate_window, everything, gap_profile, member,
                   multiples, normalize)
from .fiber import (INTEGERS2, NATURALS2, BlockUnion, ExplicitPoints, FiberBacked, PlaneSet,
                    PlaneUniverse, Rect, plane_from_json, poly_fiber, slice_fiber)
from .families import (WitnessReport, block_witness_2d, delta_of, find_delta_witness,
                       find_ip_witness, fs_closure, fs_closure_2d, pws_witness, replay,
                       syndetic_max_gap, thick_run)
from .lattice import FamilyLattice, family_implies, family_lattice
from .constructions import (ConstructionResult, PowerBlocks, centralstar_counterexample,
                            construct, delta_free_solution_count, deltastar_counterexample,
                            gap_divergence_evidence, ipnstar_counterexample,
                            ipstar_counterexample, n_sum_free_check,
                            syndetic_failure_witness_d2, syndetic_failure_witness_neg_lead,
                            syndetic_preservation_check, thick_block_witness)
from .claims import ClaimOutcome, replay_all, replay_claim
from .report import export_report
