"""Power sum generators of the S_n invariants and the relations among them."""

from supersym.combinat import Multiset
from supersym.invariants import check_relations, count_invariants, reduce_pS, verify_spanning
from supersym.superpoly import power_sum

n = 2
print("dim of invariants of degree (2; 1):", count_invariants(n, (2,), (1,)))

S = Multiset.parse("{1,1,1'}")
r = reduce_pS(S, n)  # p_S with |S| > n in terms of smaller generators
print(S, "=", r)
print("realizes correctly:", r.realize(n) == power_sum(S, n))

rep = verify_spanning(n, (2, 1), (1,))
print(rep.to_json())

print(check_relations(3, 1, 2, max_size=2).to_json()["ok"])
