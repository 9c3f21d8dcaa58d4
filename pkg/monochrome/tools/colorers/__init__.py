"""
Sub-package containing all colorer classes
"""
from .colorer import ColoringResult, Colorer
from .hamilton_colorer import HamiltonColorer
from .kout_colorer import KOutColorer
from .adversarial_colorer import AdversarialColorer
