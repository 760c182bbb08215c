"""Exact combinatorics of spans of finite group actions.

Groups are Cayley tables, G-sets are action tables, and every
computation is carried out with exact integer arithmetic.
"""

__version__ = "0.1.0"
