"""Algebra, logic and games for two-variable first-order logic with between predicates."""

from .words import Alphabet, Word, enumerate_words, format_word, parse_word
from .regex import parse_regex
from .dfa import Dfa, compile_min_dfa, minimize
from .monoid import (FiniteMonoid, definability_report, fo2suc_definable, is_aperiodic, is_in_DA,
                     is_in_MeDA, j_leq, local_submonoid, omega_power, syntactic_monoid)
from .fo2 import eval_fo2, parse_fo2
from .tl import accepts_tl, btlinv_to_utlinv, eval_tl, parse_tl, tl_to_fo2, tl_to_fo2_sentence
from .games import GameConfig, GamePosition, distinguishing_depth, equiv_k, solve_marked_game
from .constructions import (XstParams, block_signature, circuit_eval, circuit_langs, xst_words)
from .counters import CounterFormulas, build_counter_formulas
from .satgen import (TilingInstance, TilingSolution, bounded_sat, encode_tiling,
                     reduce_th_to_bet, tiling_witness)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Word", "enumerate_words", "format_word", "parse_word", "parse_regex",
    "Dfa", "compile_min_dfa", "minimize",
    "FiniteMonoid", "definability_report", "fo2suc_definable", "is_aperiodic", "is_in_DA",
    "is_in_MeDA", "j_leq", "local_submonoid", "omega_power", "syntactic_monoid",
    "eval_fo2", "parse_fo2",
    "accepts_tl", "btlinv_to_utlinv", "eval_tl", "parse_tl", "tl_to_fo2", "tl_to_fo2_sentence",
    "GameConfig", "GamePosition", "distinguishing_depth", "equiv_k", "solve_marked_game",
    "XstParams", "block_signature", "circuit_eval", "circuit_langs", "xst_words",
    "CounterFormulas", "build_counter_formulas",
    "TilingInstance", "TilingSolution", "bounded_sat", "encode_tiling", "reduce_th_to_bet",
    "tiling_witness",
]
