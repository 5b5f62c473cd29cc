"""Decompose a homogeneous piece of C[X; Theta] into S_n irreducibles three ways."""

from supersym.combinat import partitions
from supersym.superpoly import brute_multiplicity, trace_character
from supersym.symfunc import module_frobenius
from supersym.tableaux import multiplicity

n = 4
alpha, beta = (2, 1), (1,)  # x-degrees in two commuting sets, one theta

# character of the component, one value per cycle type
for mu in partitions(n):
    print("trace at", mu, "=", trace_character(n, 2, 1, alpha, beta, mu))

frob = module_frobenius(n, alpha, beta)  # Schur expansion of the Frobenius image
print(frob)

print("shape          tableaux  schur  brute")
for lam in partitions(n):
    a = multiplicity(lam, alpha, beta, n)
    b = frob.coefficient(lam)
    c = brute_multiplicity(n, lam, alpha, beta)
    print(f"{str(lam):14} {a:8} {int(b):6} {c:6}")
