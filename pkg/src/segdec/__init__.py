"""Decoder, logic, netlist, electrical and rendering toolkit for a ten-segment
display of Bengali numerals."""

from .boolexpr import Cube, SopExpr, check_equivalence, eval_sop, paper_expressions, parse_sop, print_sop
from .electrical import LedSpec, digit_current, power_table, resistor_value
from .errors import CompileError, DomainError, FormatError, ParseError, SegdecError
from .glyphs import (
    DisplayMode,
    SegmentSet,
    TruthTable,
    bengali_table,
    combination_vector,
    cross_check_tables,
    decode,
    minterm_list,
)
from .minimizer import MinimizeSpec, minimize, prime_implicants, verify_cover
from .netlist import Netlist, compile_decoder, compile_sop, emit, parse_netlist, simulate, stats
from .render import RenderOptions, default_geometry, render_svg, render_text

__version__ = "0.1.0"
