from graphconj import FamilyFilter, enumerate_connected, random_regular

families = ("all", "subcubic", "cubic", "claw_free")


def time_enumerate(family):
    n = 6 if family in ("all", "claw_free") else 8
    for _ in enumerate_connected(n, FamilyFilter.from_string(family)):
        pass


time_enumerate.params = families


def time_random_cubic():
    for _ in random_regular(3, 40, 20, seed=1):
        pass
