// Scripted walkthrough of the whole survey against an in-memory stand-in
// for the HTTP API: 10 questions x 2 phases must yield exactly 20
// correctly mode-labeled feedback records, and the chart model must match
// the summary endpoint number for number.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { chartModel } from "../src/chart.js";
import { SurveyFlow } from "../src/survey.js";
import { DIMENSIONS } from "../src/types.js";
import type { Dimension, FeedbackRecord, Mode, Summary, SurveyQuestion } from "../src/types.js";

const QUESTIONS: SurveyQuestion[] = Array.from({ length: 10 }, (_, i) => ({
  id: `sq-${String(i + 1).padStart(2, "0")}`,
  question: `Survey question ${i + 1}?`,
}));

const MODES: Mode[] = ["with_explanation", "without_explanation"];

// Minimal re-implementation of the server's aggregation, used as the
// mock /api/survey/summary.
function summarize(records: FeedbackRecord[]): Summary {
  const summary = {} as Summary;
  for (const dim of DIMENSIONS) {
    summary[dim as Dimension] = {
      with_explanation: { histogram: [0, 0, 0, 0, 0], count: 0, mean: null },
      without_explanation: { histogram: [0, 0, 0, 0, 0], count: 0, mean: null },
    };
  }
  for (const record of records) {
    for (const dim of DIMENSIONS) {
      const cell = summary[dim as Dimension][record.mode];
      cell.histogram[record.ratings[dim as Dimension] - 1] += 1;
      cell.count += 1;
    }
  }
  for (const dim of DIMENSIONS) {
    for (const mode of MODES) {
      const cell = summary[dim as Dimension][mode];
      if (cell.count > 0) {
        cell.mean =
          cell.histogram.reduce((acc, n, i) => acc + (i + 1) * n, 0) / cell.count;
      }
    }
  }
  return summary;
}

function mockServer() {
  const stored: FeedbackRecord[] = [];
  const fetcher = async (url: string, init?: RequestInit): Promise<Response> => {
    if (url.endsWith("/api/questions")) {
      return new Response(JSON.stringify({ questions: QUESTIONS }), { status: 200 });
    }
    if (url.endsWith("/api/feedback")) {
      const record = JSON.parse(String(init?.body)) as FeedbackRecord;
      stored.push(record);
      return new Response(JSON.stringify({ id: `id-${stored.length}` }), { status: 200 });
    }
    if (url.endsWith("/api/survey/summary")) {
      return new Response(JSON.stringify(summarize(stored)), { status: 200 });
    }
    return new Response("not found", { status: 404 });
  };
  return { stored, fetcher };
}

describe("survey walkthrough", () => {
  it("submits 20 correctly labeled records and charts match the summary", async () => {
    const { stored, fetcher } = mockServer();
    const api = new ApiClient(fetcher);

    const questions = await api.surveyQuestions();
    const flow = new SurveyFlow(questions, "walkthrough");
    let tick = 0;
    while (!flow.finished) {
      const ratings = {
        justification: (tick % 5) + 1,
        education: ((tick + 1) % 5) + 1,
        involvement: ((tick + 2) % 5) + 1,
        acceptance: ((tick + 3) % 5) + 1,
      };
      const record = flow.submit(ratings);
      await api.submitFeedback(record);
      tick += 1;
    }

    expect(stored).toHaveLength(20);
    expect(stored.filter((r) => r.mode === "without_explanation")).toHaveLength(10);
    expect(stored.filter((r) => r.mode === "with_explanation")).toHaveLength(10);
    // phase order: all phase-1 records precede phase-2 records
    expect(stored.slice(0, 10).every((r) => r.mode === "without_explanation")).toBe(true);
    expect(stored.slice(10).every((r) => r.mode === "with_explanation")).toBe(true);
    expect(stored.map((r) => r.question_id).slice(0, 10)).toEqual(QUESTIONS.map((q) => q.id));

    const summary = await api.summary();
    for (const dim of DIMENSIONS) {
      const model = chartModel(summary, dim as Dimension);
      for (const series of model.series) {
        const cell = summary[dim as Dimension][series.mode];
        expect(series.values).toEqual(cell.histogram);
        expect(series.mean).toBe(cell.mean);
        expect(series.values.reduce((a, b) => a + b, 0)).toBe(cell.count);
        expect(cell.count).toBe(10);
      }
    }
  });
});
