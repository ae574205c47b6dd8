"""Walk through the two-cycle algebra with radical square zero.

Run with ``python3 demos/01_two_cycle.py``.
"""
from rigdim.fixtures import cyc2
from rigdim.homological import ext_dim, nodes_and_rho, rigidity_degree
from rigdim.repmod import projective, simple
from rigdim.endoglobal import endo_gldim, mueller_check
from rigdim.rigidity import enumerate_indecomposables, rigidity_dimension

A = cyc2()
print(A.name, "has dimension", A.dim)

# four indecomposables: two simples, two projective-injectives
for M in enumerate_indecomposables(A).modules:
    print(f"  {M.label:4s} dims={M.dims}")

P1, P2, S1, S2 = projective(A, 0), projective(A, 1), simple(A, 0), simple(A, 1)

# Ext between the simples alternates with period two
for i in range(1, 5):
    print(f"Ext^{i}(S1, S1) = {ext_dim(S1, S1, i)}   Ext^{i}(S1, S2) = {ext_dim(S1, S2, i)}")

M = [P1, P2, S1]
print("evd(P1+P2+S1) =", rigidity_degree(M))
print("gldim End(P1+P2+S1) =", endo_gldim(M))
print("Mueller check:", mueller_check(M).to_json())

# with both simples the ring has finite gldim too, but evd drops to 0
print("gldim End(A+S1+S2) =", endo_gldim([P1, P2, S1, S2]))

report = rigidity_dimension(A)
print("cf =", report.cf, "witness", report.witness)
print("nodes:", nodes_and_rho(A).to_json())
