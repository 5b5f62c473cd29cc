"""Row-constant fillings reproduce h and e evaluated at permutation eigenvalues."""

from supersym.combinat import Multiset, m_tilde, partitions
from supersym.fillings import count_T, evalhet_sum, filling_from_rows, signed_sum_Tbar
from supersym.symfunc import e, eval_xi, h, hall_inner, newton_convert, p, s

for mu in [(1, 1, 1), (2, 1), (3,)]:
    print("s_2 at", mu, "->", eval_xi(s(2), mu))

alpha, beta = (2, 1), (2,)
for mu in partitions(4):
    print(mu, count_T(alpha, mu), eval_xi(h(*alpha), mu), signed_sum_Tbar(beta, mu), eval_xi(e(*beta), mu))

# one signed filling of (5,5,3,2,2,2,2,1,1,1), labels bottom row first
rows = ["{}", "{1,3}", "{}", "{1'}", "{1,1'}", "{1'}", "{1,1',2'}", "{}", "{2,2}", "{1,1,2}"]
f = filling_from_rows((5, 5, 3, 2, 2, 2, 2, 1, 1, 1), [Multiset.parse(r) for r in rows])
print(f.render())
print("weight", f.weight(), "types", m_tilde(f.msp()))

lam, tau, mu = (1,), (1,), (1, 1, 1)
pairing = hall_inner(newton_convert(h(1, *lam)) * newton_convert(e(*tau)), p(*mu))
print("signed fillings", evalhet_sum(lam, tau, mu), "pairing", pairing)
