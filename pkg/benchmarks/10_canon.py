import graphconj
from graphconj.graph import petersen_graph

from . import util

graphs = {}


def setup(*args):
    graphs.update(util.named_graphs())
    graphs["petersen_shuffled"] = petersen_graph().relabel(
        [3, 7, 0, 9, 1, 5, 8, 2, 6, 4]
    )


def time_canonical_form(key):
    graphconj.canonical_form(graphs[key])


time_canonical_form.params = util.NAMED + ("petersen_shuffled",)


def time_is_isomorphic():
    graphconj.is_isomorphic(graphs["petersen"], graphs["petersen_shuffled"])
