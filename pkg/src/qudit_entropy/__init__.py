"""Entropic inequalities for single qudits and parametric-oscillator tomograms."""

__version__ = "0.1.0"
