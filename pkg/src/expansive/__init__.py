"""Exact-arithmetic toolkit for separation behavior of symbolic dynamics.

The package decides, certifies, or refutes separation properties of concrete
symbolic systems: infinite separation sets for pairs of points, absence of
doubly asymptotic pairs in vertex shifts, and uniform separation-window
certificates; plus a computable ordered-field model of infinitesimal and
infinite quantities, and interval exchange maps as a source of examples.
"""

from .germ import (DivisionByZeroGerm, Germ, GermClass, HyperInteger,
                   InfiniteGerm, LemmaCheckResult, PerturbationNotInfinitesimal,
                   classify, compare, evaluate_expression, germ_arith,
                   infinitely_close, lemma_transfer_check, parse_germ,
                   standard_part)
from .sequences import (Alphabet, AlphabetMismatch, DifferenceSet,
                        MetricInterval, PatchedPeriodicSequence,
                        difference_set, metric_exact, metric_window,
                        sequence_from_json, sequence_to_json, shift)
from .systems import (ConjugacyCheck, NotEssential, NotInvertible, Sft,
                      SlidingBlockCode, SystemMap, apply_code, compose_power,
                      sft_contains, verify_conjugacy)
from .iet import (DivisionByZero, FieldElem, IetMap, ItineraryResult,
                  IrregularOrbit, OutOfDomain, RegularityResult,
                  check_commutation, field_ops, is_regular, itinerary)
from .analysis import (ASYMPTOTIC, NOT_ASYMPTOTIC, SEPARATES_FINITELY,
                       SEPARATES_INFINITELY, AsymptoticVerdict, BadConstant,
                       ConstantOutOfRange, EmpiricalLanguage, EqualPoints,
                       NonpositiveAlpha, NonpositiveConstant, PairGraphResult,
                       PowerTransportRecord, SeparationReport, SeparationTimes,
                       SftExpansivenessResult, SftLanguage, TransportBound,
                       WindowCertificate, WindowSeparationReport,
                       asymptotic_verdict, nonstandard_expansive_pair,
                       nonstandard_expansive_sft, power_separation_transport,
                       separation_report, separation_report_windows,
                       separation_times, sft_doubly_asymptotic_exists,
                       transport_bound, transport_constant,
                       uniform_window_step, window_sequence)

__version__ = "0.1.0"
