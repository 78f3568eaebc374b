// Spawns the real gateway on a fixture corpus for the e2e tests.
//
// The corpus is the repo's mini fixture plus three purpose-built articles
// A, B, C whose tags x, y, z produce the exact navigation shapes the tests
// assert on: pivot(x) = [y, z], popular(x) a strict subset, and
// filter(+x, -z) = {A, C}.

import { spawn, type ChildProcess } from "node:child_process";
import { copyFileSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";

export const API_BASE = "http://127.0.0.1:8971";

const REPO_ROOT = resolve(__dirname, "..", "..");

const EXTRA_ARTICLES = ["A", "B", "C"].map((id) =>
  JSON.stringify({
    id,
    title: `Article ${id}`,
    content: `Body of article ${id}.`,
    categories: [],
    links: [],
  }),
);

const EXTRA_TAGS = [
  { user: "u51", article: "A", tag: "x" },
  { user: "u52", article: "A", tag: "y" },
  { user: "u53", article: "A", tag: "y" },
  { user: "u51", article: "B", tag: "x" },
  { user: "u52", article: "B", tag: "z" },
  { user: "u51", article: "C", tag: "x" },
  { user: "u52", article: "C", tag: "x" },
].map((record) => JSON.stringify(record));

function buildFixtures(): { articles: string; tags: string; relations: string } {
  const dir = mkdtempSync(join(tmpdir(), "tagnav-ui-"));
  const fixtures = join(REPO_ROOT, "fixtures");

  const articles = join(dir, "articles.jsonl");
  const baseArticles = readFileSync(join(fixtures, "mini.jsonl"), "utf-8").trimEnd();
  writeFileSync(articles, `${baseArticles}\n${EXTRA_ARTICLES.join("\n")}\n`);

  const tags = join(dir, "tags.jsonl");
  const baseTags = readFileSync(join(fixtures, "mini-tags.jsonl"), "utf-8").trimEnd();
  writeFileSync(tags, `${baseTags}\n${EXTRA_TAGS.join("\n")}\n`);

  const relations = join(dir, "relations.txt");
  copyFileSync(join(fixtures, "mini-relations.txt"), relations);
  return { articles, tags, relations };
}

async function waitUntilReady(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${API_BASE}/api/status`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error(`gateway did not come up at ${API_BASE} within ${timeoutMs}ms`);
}

let server: ChildProcess | undefined;

export default async function setup(): Promise<() => Promise<void>> {
  const paths = buildFixtures();
  server = spawn(
    "python3",
    [
      "-m",
      "tagnav.cli",
      "serve",
      "--addr",
      "127.0.0.1:8971",
      "--articles",
      paths.articles,
      "--tags-file",
      paths.tags,
      "--relations",
      paths.relations,
      "--min-users",
      "2",
    ],
    { cwd: REPO_ROOT, stdio: ["ignore", "pipe", "pipe"] },
  );
  const stderr: string[] = [];
  server.stderr?.on("data", (chunk: Buffer) => stderr.push(chunk.toString()));
  server.on("exit", (code) => {
    if (code !== null && code !== 0) {
      console.error(`gateway exited with ${code}:\n${stderr.join("")}`);
    }
  });
  await waitUntilReady(20_000);

  return async () => {
    server?.kill("SIGTERM");
    await new Promise((r) => setTimeout(r, 200));
  };
}
