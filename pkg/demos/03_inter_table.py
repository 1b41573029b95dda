"""
The inter table
===============

With BFS marks every pattern becomes a cell (g, h). A query at (g, h) must
return every pattern whose marks are ancestors of g and of h, and the table
links make that a walk over answers only.
"""
from gapmatch import Dictionary, GappedIndex
from gapmatch.inter_table import QueryStats, lookup_query

pairs = [("a", "x"), ("cba", "xyz"), ("ba", "xyz"), ("cba", "xy")]
index = GappedIndex(Dictionary.from_pairs(pairs, 0, 0), backends=("lookup",))
table = index.inter

for g, h, i in index.bfs_points:
    print(f"pattern {pairs[i]} at cell ({g}, {h})")

# pattern index per cell, "." when empty
mf, ms = table.shape
for g in range(1, mf + 1):
    print(" ".join("." if table.index[g, h] < 0 else str(table.index[g, h]) for h in range(1, ms + 1)))

# cell (2,2) holds nothing itself, so (3,3) links straight past it to (1,1)
print("(2,2):", table.cell(2, 2))
print("(3,3):", table.cell(3, 3))

stats = QueryStats()
print("answer at (3,3):", sorted(lookup_query(table, 3, 3, stats)), "links followed:", stats.link_follows)
