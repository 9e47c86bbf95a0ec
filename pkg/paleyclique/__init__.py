"""
paleyclique
~~~~~~~~~~~

Exact finite field, product set and clique computations for generalized
Paley graphs and other Cayley graphs over F_{q^2}.
"""

__version__ = '0.1'
