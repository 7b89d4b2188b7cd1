# %% [markdown]
# # Minimum spanning tree of similar words
#
# Similarities become distances `sqrt(2 (1 - s))`; Kruskal's algorithm then
# links the words with the shortest total distance.

# %%
from distsim import SimilarityRecord, export_graph, gower_distance, load_lexicon, minimum_spanning_tree

print([round(gower_distance(s), 3) for s in (1.0, 0.98, 0.5, 0.0)])

# %%
records = [
    SimilarityRecord("abr", "kdi", 1.00, 3, 3),
    SimilarityRecord("amnp", "mk", 1.00, 17, 7),
    SimilarityRecord("kek", "mk", 1.00, 5, 7),
    SimilarityRecord("amnp", "seb", 0.98, 17, 15),
    SimilarityRecord("qes", "qor", 0.98, 12, 6),
    SimilarityRecord("mk", "seb", 0.97, 7, 15),
    SimilarityRecord("abr", "mk", 0.95, 3, 7),
    SimilarityRecord("qor", "seb", 0.95, 6, 15),
]
tree = minimum_spanning_tree(records)
print(f"{len(tree.edges)} edges, total distance {tree.total_weight:.3f}")

# %%
print(export_graph(tree, load_lexicon()))
print(export_graph(tree, fmt="tsv"))
