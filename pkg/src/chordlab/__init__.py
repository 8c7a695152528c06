"""Exact enumerative combinatorics of linear chord diagrams."""
from .diagram import Chord, ChordDiagram, chords, crossing, from_chords, nesting, parse_chord, parse_diagram
from .enumeration import DiagramStream, Filter, catalan, count, double_factorial, enumerate_diagrams, split
from .errors import ResourceCapError, ValidationError
from .statistics import (Statistic, StatisticHistogram, crossing_count, histogram, lr_pairs, min_length,
                         nesting_count, short_chords)

__version__ = "0.1.0"
