"""The computations are characteristic-free as long as p exceeds dim End(M)."""
from rigdim.exactla import FieldSpec
from rigdim.fixtures import cyc2, x3
from rigdim.rigidity import rigidity_dimension

for p in (None, 101, 10007):
    field = FieldSpec.rational() if p is None else FieldSpec.prime(p)
    for make in (cyc2, x3):
        A = make(field)
        print(f"{A.name:5s} over {'Q' if p is None else f'F_{p}':8s} cf = {rigidity_dimension(A).cf}")
