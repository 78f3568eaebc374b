from __future__ import annotations

import random

import pytest

from tagnav.analytics import (
    build_cloud,
    cloud_json,
    curve_csv,
    percent,
    presence_by_tag_count,
    presence_csv,
    presence_stats,
    tag_found_in,
)
from tagnav.corpus import Article, ArticleSet, tokenize
from tagnav.errors import MissingArticle, NoPairs
from tagnav.tags import WeightedTagList


def corpus(docs):
    """docs: id -> (title, content, categories, tags)."""
    articles = ArticleSet(
        {
            doc_id: Article(id=doc_id, title=t, content=c, categories=tuple(cats))
            for doc_id, (t, c, cats, _) in docs.items()
        }
    )
    taglists = {
        doc_id: WeightedTagList(article=doc_id, weights={tag: 1 for tag in tags})
        for doc_id, (_, _, _, tags) in docs.items()
        if tags
    }
    return articles, taglists


class TestTagFoundIn:
    def test_contiguous_match(self):
        assert tag_found_in("science fiction", ["great", "science", "fiction", "books"])

    def test_gap_is_no_match(self):
        assert not tag_found_in("science fiction", ["science", "and", "fiction"])

    def test_empty_terms(self):
        assert not tag_found_in("science fiction", [])

    def test_single_token_membership(self):
        assert tag_found_in("books", ["science", "books"])
        assert not tag_found_in("book", ["science", "books"])

    def test_no_substring_matches(self):
        assert not tag_found_in("art", ["artificial", "intelligence"])


class TestPercent:
    def test_categories_row(self):
        assert percent(35_237, 422_471) == 7.70

    def test_zero_found(self):
        assert percent(0, 5) == 0.00

    def test_content_row_rounds_half_up(self):
        assert percent(202_151, 255_557) == 44.17

    def test_document_row(self):
        assert percent(251_139, 206_569) == 54.87

    def test_no_pairs(self):
        with pytest.raises(NoPairs):
            percent(0, 0)


class TestPresenceStats:
    def test_hand_example(self):
        articles, taglists = corpus(
            {"a": ("", "alpha beta", ["Beta Things"], ["alpha", "gamma", "beta things"])}
        )
        stats = presence_stats(articles, taglists)
        assert stats.total_pairs == 3
        assert (stats.scopes["content"].found, stats.scopes["content"].not_found) == (1, 2)
        assert (stats.scopes["categories"].found, stats.scopes["categories"].not_found) == (1, 2)
        assert (stats.scopes["document"].found, stats.scopes["document"].not_found) == (2, 1)

    def test_no_tagged_articles(self):
        articles, _ = corpus({"a": ("t", "c", [], [])})
        stats = presence_stats(articles, {})
        assert stats.total_pairs == 0
        assert all(c.found == 0 and c.not_found == 0 for c in stats.scopes.values())

    def test_missing_article(self):
        taglists = {"ghost": WeightedTagList(article="ghost", weights={"x": 1})}
        with pytest.raises(MissingArticle):
            presence_stats(ArticleSet({}), taglists)

    def test_category_boundary_not_crossed(self):
        articles, taglists = corpus(
            {"a": ("", "", ["alpha", "beta"], ["alpha beta"])}
        )
        stats = presence_stats(articles, taglists)
        assert stats.scopes["categories"].found == 0

    def test_title_counts_toward_document(self):
        articles, taglists = corpus({"a": ("The Alpha", "", [], ["alpha"])})
        stats = presence_stats(articles, taglists)
        assert stats.scopes["document"].found == 1
        assert stats.scopes["content"].found == 0
        assert stats.scopes["categories"].found == 0

    def test_mini_fixture_hand_derived(self, mini_state):
        stats = presence_stats(mini_state.articles, mini_state.taglists)
        assert stats.total_pairs == 21
        assert (stats.scopes["document"].found, stats.scopes["content"].found,
                stats.scopes["categories"].found) == (15, 13, 7)


class TestCurve:
    def test_single_article(self):
        articles, taglists = corpus(
            {"a": ("", "one two", [], ["one", "two", "three"])}
        )
        rows = presence_by_tag_count(articles, taglists)
        assert len(rows) == 1
        row = rows[0]
        assert (row.tag_count, row.articles, row.pairs) == (3, 1, 3)
        assert row.pct_document == 66.67

    def test_empty(self):
        assert presence_by_tag_count(ArticleSet({}), {}) == []

    def test_rows_sorted_and_pairs_sum(self, mini_state):
        rows = presence_by_tag_count(mini_state.articles, mini_state.taglists)
        assert [r.tag_count for r in rows] == sorted(r.tag_count for r in rows)
        stats = presence_stats(mini_state.articles, mini_state.taglists)
        assert sum(r.pairs for r in rows) == stats.total_pairs


class TestCloud:
    def test_log_interpolation(self):
        cloud = build_cloud({"a": 1, "b": 10, "c": 100}, top_n=50, min_font=10, max_font=30)
        assert {e.tag: e.font for e in cloud.entries} == {"a": 10, "b": 20, "c": 30}

    def test_single_tag_gets_max_font(self):
        cloud = build_cloud({"only": 7}, top_n=5, min_font=10, max_font=30)
        assert cloud.entries[0].font == 30

    def test_all_equal_weights_get_max_font(self):
        cloud = build_cloud({"a": 3, "b": 3, "c": 3}, top_n=5, min_font=8, max_font=24)
        assert {e.font for e in cloud.entries} == {24}

    def test_empty_weights(self):
        assert build_cloud({}, top_n=5, min_font=10, max_font=30).entries == []

    def test_top_n_cut_ties_alphabetical(self):
        cloud = build_cloud({"b": 2, "a": 2, "c": 1}, top_n=2, min_font=10, max_font=30)
        assert [e.tag for e in cloud.entries] == ["a", "b"]

    def test_bounds_and_monotonicity(self):
        rng = random.Random(5)
        for _ in range(50):
            weights = {f"t{i}": rng.randint(1, 1000) for i in range(rng.randint(1, 20))}
            cloud = build_cloud(weights, top_n=rng.randint(1, 25), min_font=10, max_font=40)
            fonts = {e.tag: e.font for e in cloud.entries}
            kept = {e.tag: e.weight for e in cloud.entries}
            for e in cloud.entries:
                assert 10 <= e.font <= 40
            heaviest = max(kept.values())
            lightest = min(kept.values())
            for tag, weight in kept.items():
                if weight == heaviest:
                    assert fonts[tag] == 40
                if weight == lightest and lightest != heaviest:
                    assert fonts[tag] == 10
            for a in kept:
                for b in kept:
                    if kept[a] >= kept[b]:
                        assert fonts[a] >= fonts[b]

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            build_cloud({"a": 1}, top_n=0)
        with pytest.raises(ValueError):
            build_cloud({"a": 1}, min_font=30, max_font=10)

    def test_corpus_heaviest_tag_largest(self, mini_state):
        from tagnav.tags import global_weights

        weights = global_weights(mini_state.taglists)
        cloud = build_cloud(weights, top_n=50, min_font=10, max_font=30)
        assert cloud.entries[0].tag == "programming"
        assert cloud.entries[0].font == 30


class TestEmitters:
    def test_presence_csv_layout(self, mini_state):
        stats = presence_stats(mini_state.articles, mini_state.taglists)
        lines = presence_csv(stats).splitlines()
        assert lines[0] == "scope,found,not_found,percent"
        assert lines[1] == "document,15,6,71.43"
        assert lines[2] == "content,13,8,61.90"
        assert lines[3] == "categories,7,14,33.33"

    def test_curve_csv_layout(self, mini_state):
        rows = presence_by_tag_count(mini_state.articles, mini_state.taglists)
        lines = curve_csv(rows).splitlines()
        assert lines[0] == "tag_count,articles,pairs,pct_document,pct_content,pct_categories"
        assert lines[1] == "2,6,12,75.00,58.33,50.00"
        assert lines[2] == "3,3,9,66.67,66.67,11.11"

    def test_cloud_json_fields(self):
        payload = cloud_json(build_cloud({"a": 1, "b": 10}, top_n=5))
        assert '"tag": "b"' in payload and '"weight": 10' in payload and '"font": 30' in payload


# -- brute-force scanner oracle --------------------------------------------------


def oracle_found(tag, terms):
    """Independent contiguous-match check via separator-joined substrings."""
    hay = "\x00" + "\x00".join(terms) + "\x00"
    needle = "\x00" + "\x00".join(tokenize(tag)) + "\x00"
    return bool(tokenize(tag)) and needle in hay


def oracle_scopes(article, tag):
    content = oracle_found(tag, tokenize(article.content))
    categories = any(oracle_found(tag, tokenize(name)) for name in article.categories)
    title = oracle_found(tag, tokenize(article.title))
    return {"document": title or content or categories, "content": content, "categories": categories}


def random_presence_instance(rng):
    words = ["ash", "bay", "cedar", "dune", "elm", "fern", "gale", "holt"]
    docs = {}
    for i in range(rng.randint(1, 10)):
        tags = []
        for _ in range(rng.randint(0, 8)):
            tags.append(" ".join(rng.sample(words, k=rng.randint(1, 2))))
        docs[f"a{i}"] = (
            " ".join(rng.choices(words, k=rng.randint(0, 3))),
            " ".join(rng.choices(words, k=rng.randint(0, 15))),
            [" ".join(rng.choices(words, k=rng.randint(1, 2))) for _ in range(rng.randint(0, 2))],
            sorted(set(tags)),
        )
    return corpus(docs)


def test_presence_matches_brute_force_scanner():
    rng = random.Random(314)
    for _ in range(100):
        articles, taglists = random_presence_instance(rng)
        stats = presence_stats(articles, taglists)

        expected = {"document": 0, "content": 0, "categories": 0}
        total = 0
        for article_id, taglist in taglists.items():
            article = articles[article_id]
            for tag in taglist.weights:
                total += 1
                for scope, hit in oracle_scopes(article, tag).items():
                    expected[scope] += int(hit)

        assert stats.total_pairs == total
        for scope in expected:
            assert stats.scopes[scope].found == expected[scope]
            assert stats.scopes[scope].found + stats.scopes[scope].not_found == total

        # structural invariants: dominance and the union bound
        title_found = sum(
            int(oracle_found(tag, tokenize(articles[article_id].title)))
            for article_id, taglist in taglists.items()
            for tag in taglist.weights
        )
        document = stats.scopes["document"].found
        assert document >= stats.scopes["content"].found
        assert document >= stats.scopes["categories"].found
        assert document <= (
            stats.scopes["content"].found + stats.scopes["categories"].found + title_found
        )


def test_curve_matches_brute_force_scanner():
    rng = random.Random(1618)
    for _ in range(40):
        articles, taglists = random_presence_instance(rng)
        rows = presence_by_tag_count(articles, taglists)

        groups: dict[int, list[str]] = {}
        for article_id, taglist in taglists.items():
            groups.setdefault(len(taglist.weights), []).append(article_id)
        assert [r.tag_count for r in rows] == sorted(groups)
        for row in rows:
            members = groups[row.tag_count]
            assert row.articles == len(members)
            found = {"document": 0, "content": 0, "categories": 0}
            pairs = 0
            for article_id in members:
                article = articles[article_id]
                for tag in taglists[article_id].weights:
                    pairs += 1
                    for scope, hit in oracle_scopes(article, tag).items():
                        found[scope] += int(hit)
            assert row.pairs == pairs
            assert row.pct_document == percent(found["document"], pairs - found["document"])
            assert row.pct_content == percent(found["content"], pairs - found["content"])
            assert row.pct_categories == percent(found["categories"], pairs - found["categories"])
