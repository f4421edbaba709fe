"""Walk through the six-node example: essential graph, covered edges, a
minimum verifying set, and what one intervention at a time reveals."""

from causaladvice.fixtures import six_node_example, six_node_partial_advice
from causaladvice.graph import save_graph
from causaladvice.mec import covered_edges, enumerate_mec, essential_graph
from causaladvice.oracle import Oracle
from causaladvice.search import advice_search_mpdag, full_search
from causaladvice.verification import verifying_set_atomic


def show(title, g):
    arcs = ", ".join(f"{u}->{v}" for u, v in sorted(g.arcs))
    edges = ", ".join(f"{u}-{v}" for u, v in sorted(g.edges))
    print(f"{title}\n  directed:   {arcs or '(none)'}\n  undirected: {edges or '(none)'}")


truth = six_node_example()
show("hidden DAG", truth)

e = essential_graph(truth)
show("what observational data gives us", e)
print(f"  the class holds {len(enumerate_mec(e))} DAGs")

print("covered edges:", sorted(covered_edges(truth)))
cover = verifying_set_atomic(truth)
print("a minimum verifying set:", sorted(cover))

oracle = Oracle(truth)
for v in sorted(cover):
    oracle.intervene([[v]])
    show(f"after intervening on {v}", oracle.current)

print()
blind = full_search(Oracle(truth))
print(f"search without advice used {blind.count} interventions: {[sorted(s) for s in blind.interventions]}")

partial = six_node_partial_advice()
show("partial advice from an expert", partial)
rep = advice_search_mpdag(Oracle(truth), partial)
print(f"search with that advice used {rep.count} interventions")
print("json form of the essential graph:", save_graph(e))
