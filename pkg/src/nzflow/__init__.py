"""Nowhere-zero Z3-flows, flow-critical graphs and irrelevant edges in sparse graphs."""

from .flows import Flow, extend_flow, oracle_nz_flow, verify_flow
from .multigraph import MultiGraph, build_graph, contract_edge
from .solver import FlowFound, IrrelevantEdge, NoFlow, solve_full, solve_sparse

__all__ = [
    "Flow",
    "FlowFound",
    "IrrelevantEdge",
    "MultiGraph",
    "NoFlow",
    "build_graph",
    "contract_edge",
    "extend_flow",
    "oracle_nz_flow",
    "solve_full",
    "solve_sparse",
    "verify_flow",
]
