"""Validate, enumerate and count multiset tableaux."""

from supersym.combinat import DegreeVector, MultisetPartition
from supersym.tableaux import MultisetTableau, count_with_entry_multiset, enumerate_tableaux, validate

# rows listed bottom to top, blanks as {}
t = MultisetTableau.parse([
    ["{}", "{}", "{2}", "{2}", "{1',2'}", "{1',2'}", "{2'}"],
    ["{1,1'}", "{2}", "{1',2'}"],
    ["{1,1'}", "{2'}"],
    ["{1,1'}", "{2'}"],
    ["{2}"],
])
print(t.render())
print("violation:", validate(t))

bad = MultisetTableau.parse([["{1'}", "{1'}"]])
print(validate(bad))  # odd labels may not share a row

# every tableau of shape (2,1) with one 1, one 2 and one 1'
for s in enumerate_tableaux((2, 1), DegreeVector((1, 1), (1,))):
    print(s.render(), end="\n\n")

pi = MultisetPartition.parse(
    "{{1,1,2},{1,3},{1,3},{1,3},{1,3},{1,3},{1,1'},{1,1'},{1,1',2'},{1,1',2'},{2,2},{1'},{1'},{1'},{1'}}"
)
print("shape (10,8,5,1):", count_with_entry_multiset((10, 8, 5, 1), pi, 24), "tableaux")
