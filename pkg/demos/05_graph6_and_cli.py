"""
graph6 input and the command line
=================================

Graphs travel as graph6 strings, one per line, the format nauty's geng
writes.  A file of graphs can stand in for a whole class.
"""
import subprocess
import sys
import tempfile
from pathlib import Path

from kindep import (
    find_optimum_in,
    graph6_decode,
    graph6_encode,
    Objective,
    path_graph,
)
from kindep.search import enumerate_class

print("P_5 as graph6:", graph6_encode(path_graph(5)))
print("decoded back :", graph6_decode(graph6_encode(path_graph(5))).edges())

with tempfile.TemporaryDirectory() as tmp:
    f = Path(tmp) / "s_6_5.g6"
    f.write_text("\n".join(graph6_encode(g)
                           for g in enumerate_class(6, 5, dedup=True)) + "\n")
    r = find_optimum_in(graph6_decode(s) for s in f.read_text().split())
    print(f"\n{len(f.read_text().split())} non-isomorphic graphs in "
          f"S(6,5), greatest:", r.verdict.value, graph6_encode(r.witness))
    r = find_optimum_in((graph6_decode(s) for s in f.read_text().split()),
                        objective=Objective.LEAST)
    print("least:", r.verdict.value, graph6_encode(r.witness))

    # The same through the CLI, writing report.json and summary.csv.
    cmd = [sys.executable, "-m", "kindep", "search", "--graph6-file", str(f),
           "--objective", "least", "--out", tmp]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print("\n$ kindep search --graph6-file s_6_5.g6 --objective least")
    print(proc.stdout, end="")
    print("exit code", proc.returncode)
    print((Path(tmp) / "summary.csv").read_text(), end="")
