"""
What tags add to search
=======================

The Framework article never says "programming" in its title, content or
categories, yet two users tagged it that way. With text fields alone the
query misses it; enable the tags field and it surfaces, because tag tokens
are indexed with their annotator counts as term frequency.
"""

from pathlib import Path

from tagnav import FieldConfig, build_state, explain, search

ROOT = Path(__file__).resolve().parents[1]

state = build_state(
    ROOT / "fixtures" / "mini.jsonl",
    ROOT / "fixtures" / "mini-tags.jsonl",
    ROOT / "fixtures" / "mini-relations.txt",
    min_users=2,
)


def show(label, config):
    print(f"search('programming') with {label}:")
    for result in search(state.index, "programming", config):
        title = state.articles[result.article].title
        fields = sorted({f for fs in result.matched_fields.values() for f in fs})
        print(f"  {result.score:8.4f}  {title}  (matched in: {', '.join(fields)})")
    print()


show("text fields only", FieldConfig.for_fields(["title", "content", "categories"]))
show("text + tags", FieldConfig.for_fields(["title", "content", "categories", "tags"]))

# explain() shows why Framework is a tag-only match
tf = explain(state.index, "a4", "programming")
print(f"per-field tf of 'programming' in Framework: {tf}")
