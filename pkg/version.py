# This is just for zest.releaser. Do not touch
# flake8: noqa

# fmt: off
__version__ = '0.1.dev0'
# fmt: on
