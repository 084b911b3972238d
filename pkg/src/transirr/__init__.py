"""Transmission irregularity of graphs: exact profiles, family constructors,
closed-form layer sets, classifiers and an oracle-backed verification harness."""

from .classify import Status, Verdict, classify_family
from .dsl import parse_family, render
from .families import build
from .graph_core import Graph, TransmissionProfile, transmission_profile, transmissions

__all__ = [
    "Graph",
    "Status",
    "TransmissionProfile",
    "Verdict",
    "build",
    "classify_family",
    "parse_family",
    "render",
    "transmission_profile",
    "transmissions",
]
__version__ = "0.1.0"
