"""
Package containing edge colorings of random regular and random k-out graphs with small
monochromatic components, the long-cycle bound machinery, and a sacred experiment harness
"""
import logging

logging.getLogger("monochrome").addHandler(logging.NullHandler())

__version__ = "1.0.0"
__author__ = "Riley Jackson"
__email__ = "rjjackson@upei.ca"
__description__ = (
    "Monochromatic component colorings of random regular and k-out graphs, "
    "with Monte Carlo experiments built on sacred"
)
