"""
From raw tagging events to weighted tag lists
=============================================

Walks the cleaning pipeline over the bundled mini corpus: import per-user
assignments, drop the blacklisted tags, drop barely-annotated articles,
then aggregate what is left into one weighted tag list per article.
"""

from pathlib import Path

from tagnav import (
    DEFAULT_BLACKLIST,
    SynonymGraph,
    aggregate,
    annotator_count,
    apply_blacklist,
    import_assignments,
    load_articles,
    prune_min_annotators,
    validate,
)
from tagnav.tags import usage_counts

ROOT = Path(__file__).resolve().parents[1]

# Load the corpus and look at it before any tag data arrives.
articles = load_articles(ROOT / "fixtures" / "mini.jsonl")
report = validate(articles)
print(f"{len(articles)} articles; {report.dangling_links} dangling link(s)")

# Raw assignments: one (user, article, tag) event per line.
raw = import_assignments(ROOT / "fixtures" / "mini-tags.jsonl")
print(f"{len(raw)} raw assignments by {len({a.user for a in raw})} users")

# Tags that describe the wiki itself, not its articles, are dropped first.
survivors = apply_blacklist(raw, DEFAULT_BLACKLIST)
print(f"{len(raw) - len(survivors)} assignments removed by blacklist {DEFAULT_BLACKLIST}")

# Then articles with too few distinct annotators vanish entirely.
# The corpus this engine was designed around used a threshold of 10;
# the mini fixture is desk-sized, so 2 is plenty.
cleaned = prune_min_annotators(survivors, 2)
print(f"{len(cleaned)} assignments survive the 2-annotator threshold")
print(f"article a1 has {annotator_count(cleaned, 'a1')} annotators")

# Aggregate: a tag's weight is how many distinct users assigned it.
graph = SynonymGraph(usage_counts(cleaned))
taglists = aggregate(cleaned, graph)
print(f"\nweighted tag lists for {len(taglists)} articles:")
for article_id, taglist in taglists.items():
    title = articles[article_id].title
    ranked = sorted(taglist.weights.items(), key=lambda kv: (-kv[1], kv[0]))
    rendered = ", ".join(f"{tag}({weight})" for tag, weight in ranked)
    print(f"  {title:32s} {rendered}")

# "science-fiction" already merged with "science fiction" by normalization
# alone, but "sci fi" needs a declared relation. Relate them and the three
# users' spellings collapse into one tag with weight 3.
print("\nbefore relating: ", dict(taglists["a5"].weights))
graph.relate("sci fi", "science fiction")
merged = aggregate(cleaned, graph)
print("after relating:  ", dict(merged["a5"].weights))
