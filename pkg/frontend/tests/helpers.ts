// Shared test scaffolding: the committed CLI export, and a fetch stub that
// answers API URLs out of that document the way the live server would.

import { ExportDocument } from "../src/types.js";
import fixtureJson from "./fixtures/analysis.json";

export function loadFixture(): ExportDocument {
  return fixtureJson as unknown as ExportDocument;
}

export interface FetchStub {
  fetch: typeof fetch;
  /** Number of requests whose path contained the given substring. */
  hits(fragment: string): number;
  reset(): void;
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Routes /api/{id}/... URLs into the export document. */
export function serveDocument(doc: ExportDocument, analysisId = "a1"): FetchStub {
  const requests: string[] = [];

  const handler = async (input: RequestInfo | URL): Promise<Response> => {
    const url = new URL(String(input), "http://localhost");
    requests.push(url.pathname + url.search);
    const prefix = `/api/${analysisId}`;
    if (!url.pathname.startsWith(prefix)) {
      return json({ detail: "not found" }, 404);
    }
    const rest = url.pathname.slice(prefix.length);

    if (rest === "/summary") {
      const { summary, suggestion, mean_modularity, config } = doc;
      return json({
        summary,
        suggestion,
        mean_modularity,
        config,
        community_count: doc.community_count,
        link_count: doc.link_count,
      });
    }
    if (rest === "/globalview") {
      return json(doc.globalview);
    }
    if (rest === "/matrix") {
      const x = url.searchParams.get("x");
      const y = url.searchParams.get("y");
      const found = doc.matrices.find((m) => m.axis_x === x && m.axis_y === y);
      return found ? json(found) : json({ detail: "bad axis" }, 422);
    }
    const community = rest.match(/^\/community\/(\d+)\/(\d+)$/);
    if (community) {
      const found = doc.communities.find(
        (c) =>
          c.slice === Number(community[1]) &&
          c.local_id === Number(community[2]),
      );
      return found ? json(found) : json({ detail: "not found" }, 404);
    }
    const node = rest.match(/^\/node\/(\d+)\/(\d+)\/([^/]+)$/);
    if (node) {
      const c = doc.communities.find(
        (cc) => cc.slice === Number(node[1]) && cc.local_id === Number(node[2]),
      );
      const details = c?.node_details?.find(
        (d) => d.node === decodeURIComponent(node[3]),
      );
      return details ? json(details) : json({ detail: "not found" }, 404);
    }
    return json({ detail: "not found" }, 404);
  };

  return {
    fetch: handler as typeof fetch,
    hits: (fragment) => requests.filter((r) => r.includes(fragment)).length,
    reset: () => {
      requests.length = 0;
    },
  };
}

export function click(el: Element): void {
  el.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}
