"""
Graphs, partitioning, and witness checking
==========================================

Build graphs from the bundled families, write and read DIMACS text, ask
the solver for a triangle partition, and check the witness it returns.
"""

from tripart import (
    generate,
    parse_graph,
    serialize_graph,
    solve_lex,
    validate_partition,
)

# the prism: two triangles {1,2,3}, {4,5,6} joined by a perfect matching;
# it has exactly one triangle partition, so it makes a good first example
prism = generate("prism", 6)
print("prism:", prism.n, "vertices,", prism.m, "edges")

# graphs round-trip through DIMACS edge format
text = serialize_graph(prism)
print(text, end="")
assert parse_graph(text) == prism

# solve_lex returns the lexicographically smallest partition plus counters
witness, stats = solve_lex(prism)
print("witness:", witness)
print("states visited:", stats.states_visited,
      "| candidate triangles examined:", stats.transitions_explored)

# the witness is independently checkable; None means "no violation"
print("checker says:", validate_partition(prism, witness))

# a deliberately broken claim names the first rule it breaks; on K6 both
# triples are genuine triangles, so the reuse of vertex 3 is what trips
bad = [(1, 2, 3), (3, 4, 5)]
print("checker on an overlapping claim:",
      validate_partition(generate("complete", 6), bad))

# the 6-cycle is triangle-free, so the solver proves absence
c6 = generate("cycle", 6)
witness, stats = solve_lex(c6)
print("C6 witness:", witness, "| outcome:", stats.outcome)

# planted graphs always contain the partition {1,2,3},{4,5,6},...
# regardless of how much random noise is layered on top
noisy = generate("planted", 30, p=0.2, seed=1)
witness, stats = solve_lex(noisy)
print("planted(30, 0.2, 1):", witness is not None,
      "| states visited:", stats.states_visited)
assert validate_partition(noisy, witness) is None

# seeded generation is reproducible: same arguments, same graph, always
again = generate("planted", 30, p=0.2, seed=1)
assert again == noisy
print("regenerated graph is identical:", again == noisy)
