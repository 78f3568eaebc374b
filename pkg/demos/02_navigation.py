"""
Navigating by tags: pivot, popularity, filtering
================================================

The three tag-navigation moves, next to the category/link baselines they
complement. Pivoting hops from a tag to its co-occurring tags; popularity
keeps only articles where the tag out-weighs every other; filtering is
plain set algebra with include and exclude tags.
"""

from pathlib import Path

from tagnav import build_state

ROOT = Path(__file__).resolve().parents[1]

state = build_state(
    ROOT / "fixtures" / "mini.jsonl",
    ROOT / "fixtures" / "mini-tags.jsonl",
    ROOT / "fixtures" / "mini-relations.txt",
    min_users=2,
)
nav = state.navigator

# Pivot browsing: which tags live on the same articles as "programming"?
print("pivot(programming):")
for related in nav.pivot("programming"):
    print(f"  {related.tag} (together on {related.cooccurrence} article(s))")

# Every article carrying the tag, heaviest agreement first...
print("\narticles_with_tag(software):")
for ranked in nav.articles_with_tag("software"):
    print(f"  {state.articles[ranked.article].title} (weight {ranked.score})")

# ...versus only the articles where the tag is the top-weighted one.
# "software" is always outvoted by another tag, so popularity filters
# everything out; "audio" tops its article and survives.
print(f"\npopular(software): {[r.article for r in nav.popular('software')]}")
print("popular(audio):")
for ranked in nav.popular("audio"):
    print(f"  {state.articles[ranked.article].title} (weight {ranked.score})")

# Filtering separates what you want from what you do not.
hits = nav.filter_articles({"programming"}, {"code"})
print(f"\nfilter(+programming, -code): {sorted(hits)}")

# The taxonomy baselines are one call away from the same object.
print(f"\ncategory 'Computer science': {sorted(nav.category_members('Computer science'))}")
print(f"links from a8: {nav.linked_articles('a8')}")
