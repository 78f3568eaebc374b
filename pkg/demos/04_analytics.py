"""
Tag-presence analytics and the tag cloud
========================================

How much vocabulary do tags add? For every (article, tag) pair, check
whether the tag's tokens occur in the content, the category names, or
anywhere in the document. Pairs not found anywhere are pure gain: terms
the community uses that the article never says. Grouping by tag count
shows how the picture shifts with annotation depth, and the weighted
cloud summarizes the whole corpus.
"""

from pathlib import Path

from tagnav import build_cloud, build_state, global_weights, presence_by_tag_count, presence_stats
from tagnav.analytics import curve_csv, presence_csv

ROOT = Path(__file__).resolve().parents[1]

state = build_state(
    ROOT / "fixtures" / "mini.jsonl",
    ROOT / "fixtures" / "mini-tags.jsonl",
    ROOT / "fixtures" / "mini-relations.txt",
    min_users=2,
)

stats = presence_stats(state.articles, state.taglists)
print("presence by scope:")
print(presence_csv(stats))

rows = presence_by_tag_count(state.articles, state.taglists)
print("presence by number of tags per article:")
print(curve_csv(rows))

cloud = build_cloud(global_weights(state.taglists), top_n=10, min_font=10, max_font=30)
print("tag cloud (font size tracks log weight):")
for entry in cloud.entries:
    print(f"  {entry.tag:18s} weight {entry.weight:3d}  font {entry.font}px")
