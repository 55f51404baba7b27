# Definitional-pattern extraction: from raw prose to a clusterable
# mini-corpus of candidate definitions.
#
# A pattern hit only means "term + definitional formula present".  The
# famous counterexample is planted below: "el miedo a la aguja es el más
# frecuente" matches "la <T> es el" without defining anything.  That is
# why every candidate carries verified=False; telling real definitions
# from impostors is a later judgment, human or otherwise.

from defclust import (
    candidates_to_corpus,
    compile_search_patterns,
    default_templates,
    scan_text,
)

TEXT = """\
En el primer capítulo, la aguja es un instrumento fino de acero que
sirve para coser. Más adelante se repite que la aguja es el indicador
del tachímetro; la nota al margen dice otra cosa. Se sabe que el miedo
a la aguja es el más frecuente entre los pacientes. Finalmente, la
célula es la unidad estructural de los seres vivos.
"""

templates = default_templates()
print(f"{len(templates)} bundled templates, e.g.:")
for t in templates[:4]:
    print(f"  {t.surface!r}  ({t.def_type})")
print()

patterns = compile_search_patterns(templates, ["aguja", "célula"])
print(f"expanded against 2 terms -> {len(patterns)} search patterns")
print()

candidates = scan_text(TEXT, source_id="capitulo1", patterns=patterns)
print(f"{len(candidates)} candidates found:")
for c in candidates:
    start, end = c.span
    print(f"  span {start:3d}-{end:3d}  {TEXT[start:end]!r}")
    print(f"      term={c.term}  verified={c.verified}")
    print(f"      tail: {c.tail!r}")
print()

docs = candidates_to_corpus(candidates)
print("as a corpus ready for the clustering pipeline:")
for d in docs:
    print(f"  {d.id}: {d.text}")
