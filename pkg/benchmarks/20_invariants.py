from graphconj import GraphInvariants, invariant_record
from graphconj.invariants import (
    independence_number,
    min_maximal_matching,
    zero_forcing_number,
)

from . import util

graphs = {}
cubic = []


def setup(*args):
    graphs.update(util.named_graphs())
    cubic[:] = util.cubic_graphs(10)


def time_record(key):
    invariant_record(graphs[key])


time_record.params = util.NAMED


def time_independence(key):
    independence_number(graphs[key])


time_independence.params = util.NAMED


def time_zero_forcing(key):
    zero_forcing_number(graphs[key])


time_zero_forcing.params = util.NAMED


def time_min_maximal_matching(key):
    min_maximal_matching(graphs[key])


time_min_maximal_matching.params = util.NAMED


def time_cubic_records():
    for g in cubic:
        GraphInvariants(g).record()
