"""Rigidity dimension along the cyclic radical-square-zero Nakayama family.

Self-injective members have no upper bound from the ext and idim estimates,
so every value here comes from the exhaustive search.
"""
import time

from rigdim.fixtures import nakayama_cycle
from rigdim.rigidity import rigidity_dimension

for e in range(1, 5):
    A = nakayama_cycle(e)
    t = time.perf_counter()
    r = rigidity_dimension(A)
    dt = time.perf_counter() - t
    print(f"NAK{e}: cf = {r.cf}  witness = {'+'.join(r.witness or [])}  "
          f"({r.candidates_examined} candidates, {dt:.2f}s)")
