"""Running the property suite from Python on a seeded random corpus.

The same checks back ``beth suite``.  Every failure carries the graph6
string and the operation arguments, so it can be replayed on its own.

Run:  python3 demos/06_property_suite.py
"""

from beth.suite import DEFAULT_CHECKS, GeneratorSpec, SuiteConfig, check_graph, run_suite, summarize
from beth.graph import parse_graph6

cfg = SuiteConfig(generator=GeneratorSpec.parse("n=8,p=0.4,count=10,seed=7"))
results = run_suite(cfg)
print(f"default checks: {', '.join(DEFAULT_CHECKS)}")
print(f"summary: {summarize(results)}")

# the opt-in literal nonedge identity fails, with a replayable witness
cfg = SuiteConfig(graphs=("Cr",), checks=("nonedge-identity",))
(fail,) = run_suite(cfg)
print(f"\n{fail.check} on {fail.graph6}: {fail.status}, witness {fail.detail}")
again = check_graph(parse_graph6(fail.detail["graph6"]), ["nonedge-identity"])[0]
print(f"replayed: {again.status}, same witness: {again.detail == fail.detail}")
