"""Dev scratch: extract the machine-readable appendix data and compare
with the transcriptions embedded in the package."""
import re

text = open("paper.md").read()


def grab(name):
    start = text.index(name + ":=[")
    i = start + len(name) + 2
    depth = 0
    for j in range(i, len(text)):
        if text[j] == "[":
            depth += 1
        elif text[j] == "]":
            depth -= 1
            if depth == 0:
                return text[i:j + 1]
    raise SystemExit("unbalanced")


def split_top(s):
    """Split a bracketed list into top-level entries."""
    assert s[0] == "[" and s[-1] == "]"
    body = s[1:-1]
    parts = []
    depth = 0
    cur = []
    for ch in body:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [re.sub(r"\s+", "", p) for p in parts]


phi = split_top("[" + grab("phi") + "]")[0]
phi_items = split_top(grab("phi"))
print("PHI n =", len(phi_items))

psis = [split_top(x) for x in split_top(grab("psis"))]
print("PSIS:", [len(r) for r in psis])

hlgs = [split_top(x) for x in split_top(grab("HLGs"))]
print("HLGS:", [len(r) for r in hlgs])
dual = split_top(grab("HLGdual"))
print("DUAL:", len(dual))

# compare with package transcription
from burkhardt.maps import PHI_COMPONENT_TEXT, PSI_REPRESENTATIVE_TEXT

def norm(s):
    return re.sub(r"\s+", "", s)

for i, (mine, ref) in enumerate(zip(PHI_COMPONENT_TEXT, phi_items)):
    if norm(mine) != ref:
        print("PHI MISMATCH", i)
        print(" mine:", norm(mine))
        print(" ref: ", ref)
print("phi match:", all(norm(m) == r for m, r in zip(PHI_COMPONENT_TEXT, phi_items)))

ok = True
for i, (mrep, rrep) in enumerate(zip(PSI_REPRESENTATIVE_TEXT, psis)):
    for j, (mine, ref) in enumerate(zip(mrep, rrep)):
        if norm(mine) != ref:
            ok = False
            print("PSI MISMATCH", i, j)
            print(" mine:", norm(mine))
            print(" ref: ", ref)
print("psi match:", ok)

# emit the torsion data as python literals
with open("dev_hlg_data.py", "w") as fh:
    fh.write("TORSION_TRIPLE_TEXT = [\n")
    for trip in hlgs:
        fh.write("    (\n")
        for entry in trip:
            fh.write(f"        {entry!r},\n")
        fh.write("    ),\n")
    fh.write("]\n\nTORSION_DUAL_TEXT = (\n")
    for entry in dual:
        fh.write(f"    {entry!r},\n")
    fh.write(")\n")
print("wrote dev_hlg_data.py")
