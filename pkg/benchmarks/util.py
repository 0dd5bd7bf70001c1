from graphconj import enumerate_connected_range, named_graph
from graphconj.enumeration import FamilyFilter

NAMED = ("K4", "C5", "K3_3", "double_star(2,2)", "petersen")


def named_graphs():
    return {name: named_graph(name) for name in NAMED}


def cubic_graphs(n_max=10):
    return list(enumerate_connected_range(4, n_max, FamilyFilter("cubic")))
