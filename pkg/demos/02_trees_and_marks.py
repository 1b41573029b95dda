"""
Suffix trees, vertical paths and marks
======================================

The second subpatterns are joined with a separator and indexed by a suffix
tree. The node spelling each subpattern gets a mark.
"""
from gapmatch import Dictionary, GappedIndex

dic = Dictionary.from_pairs([("x", "c"), ("y", "cd"), ("z", "d")], alpha=0, beta=0)
index = GappedIndex(dic)
tree = index.tree_s
marked = index.marked_s

print("indexed text:", tree.text.replace(b"\x00", b"$"))
print("nodes:", len(tree))

# one explicit node per subpattern; "c" sits above "cd"
for p, node in zip(dic.patterns, marked.loci):
    print(p.p2, "-> node", node, "depth", tree.depth[node])

# heavy paths: the root path of any node meets few of them
dec = marked.decomposition
print("vertical paths:", dec.count, "max crossed:", max(dec.crossings()))

# vertical-path marks come out as intervals along the root path
for p, node in zip(dic.patterns, marked.loci):
    print(p.p2, "intervals", list(marked.intervals[node]),
          "deepest BFS mark", marked.dma[node])
