from graphconj import builtin_conjectures, check_dataset, parse_conjecture

from . import util

conjectures = {}
cubic = []


def setup(*args):
    for c in builtin_conjectures():
        conjectures[c.name] = c
    cubic[:] = util.cubic_graphs(10)


def time_parse_conjecture():
    parse_conjecture(
        "c1: connected & order >= 3 :: independence >= "
        "(annihilation + residue) / max_degree [sharp]"
    )


def time_check_cubic(name):
    check_dataset(conjectures[name], cubic)


time_check_cubic.params = ("c1", "c2", "c3", "c4")
