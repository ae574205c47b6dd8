"""Same quiver, different relations: the linear A3 quiver with and without a zero relation."""
from rigdim.fixtures import a3, a3r
from rigdim.homological import homological_dims
from rigdim.rigidity import ext_vanishing_bound, rigidity_dimension

for make in (a3, a3r):
    A = make()
    dims = homological_dims(A)
    r = rigidity_dimension(A)
    print(A.name)
    print("  gldim", dims.gldim, " domdim", dims.domdim)
    print("  Ext(DA, A) vanishes up to degree", ext_vanishing_bound(A))
    print("  upper bounds: ext", r.ext_bound, " idim", r.idim_bound)
    print("  cf =", r.cf, "via", "+".join(r.witness))
