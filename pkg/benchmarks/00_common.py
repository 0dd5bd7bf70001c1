def time_import():
    import graphconj  # noqa: F401
