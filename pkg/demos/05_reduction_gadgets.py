"""
Hardness gadgets as executable instance transformers
====================================================

Every reduction ships with a certificate: solution mappings in both
directions plus the affine relation between objective values. Nothing is
trusted without a round trip.
"""

from gencut.cpmc import solve_cpmc_exact
from gencut.reductions import (
    CoverInstance,
    SetCoverInstance,
    covered_count,
    interdiction_max_flow,
    reduce_maxcover_to_interdiction,
    reduce_setcover_to_directed_cpmec,
    solve_max_cover_exact,
    solve_setcover_exact,
    square_collection,
    verify_certificate,
)

# the classic 3-element instance: A1={x1,x3}, A2={x2,x3}, A3={x1,x2}
sc = SetCoverInstance.build(3, [{0, 2}, {1, 2}, {0, 1}], [1, 1, 1])
d, sel = solve_setcover_exact(sc)
print(f"optimal cover: sets {sel}, weight {d}")

inst, cert = reduce_setcover_to_directed_cpmec(sc)
print(f"one-way gadget: {inst.graph.n} nodes, set arcs weigh {sc.n_elements * sc.k}")
sol = solve_cpmc_exact(inst)
print(f"gadget cut optimum: {sol.weight} = {sc.n_elements * sc.k} * {d} + {sol.weight - 9 * d}")

src = {"sets": list(sel), "value": d}
tgt = {"members": list(sol.members), "value": sol.weight}
verdict = verify_certificate(cert, src, tgt)
print(f"certificate verdict: {'ok' if verdict.ok else verdict.violations}")
print(f"cut mapped back to cover: {cert.backward(tgt)}")

# squaring a collection squares every fully-covered count
c = CoverInstance.build("max", 3, [{0, 1}, {1, 2}], n1=2)
sq = square_collection(c)
print(f"\ncollection squared: {[sorted(s) for s in sq.collection]}")
best, chosen = solve_max_cover_exact(c)
print(f"best 2-element choice covers {best} subsets; in the square: "
      f"{covered_count(sq, chosen)} = {best}^2")

# and the flow-blocking instance built from the same collection
inst2, cert2 = reduce_maxcover_to_interdiction(c)
print(f"\ninterdiction baseline flow: {interdiction_max_flow(inst2)} = |C|")
fwd = cert2.forward({"elements": list(chosen), "value": best})
print(f"blocking the best cover drops the flow to {fwd['value']}")
