import { describe, expect, it } from "vitest";

import { SurveyFlow, validateRatings } from "../src/survey.js";
import type { Ratings, SurveyQuestion } from "../src/types.js";

const QUESTIONS: SurveyQuestion[] = Array.from({ length: 10 }, (_, i) => ({
  id: `sq-${i + 1}`,
  question: `Question number ${i + 1}?`,
}));

const FULL: Ratings = { justification: 4, education: 3, involvement: 5, acceptance: 2 };

describe("SurveyFlow", () => {
  it("runs two phases over the same questions with correct modes", () => {
    const flow = new SurveyFlow(QUESTIONS, "session-1");
    const records = [];
    while (!flow.finished) {
      const step = flow.current;
      if (step.index < 10) {
        expect(step.phase).toBe(1);
        expect(step.mode).toBe("without_explanation");
      } else {
        expect(step.phase).toBe(2);
        expect(step.mode).toBe("with_explanation");
      }
      records.push(flow.submit(FULL));
    }
    expect(records).toHaveLength(20);
    expect(records.slice(0, 10).every((r) => r.mode === "without_explanation")).toBe(true);
    expect(records.slice(10).every((r) => r.mode === "with_explanation")).toBe(true);
    // both phases cover the same questions in the same order
    expect(records.slice(0, 10).map((r) => r.question_id)).toEqual(
      records.slice(10).map((r) => r.question_id)
    );
    expect(new Set(records.map((r) => r.session_id))).toEqual(new Set(["session-1"]));
  });

  it("blocks navigation on incomplete ratings", () => {
    const flow = new SurveyFlow(QUESTIONS, "s");
    expect(() => flow.submit({ justification: 5 })).toThrow(/education/);
    expect(flow.current.index).toBe(0);
    expect(flow.submitted).toHaveLength(0);
  });

  it("persists exactly the records submitted before abandoning", () => {
    const flow = new SurveyFlow(QUESTIONS, "s");
    flow.submit(FULL);
    flow.submit(FULL);
    flow.submit(FULL);
    expect(flow.submitted).toHaveLength(3);
    expect(flow.finished).toBe(false);
  });

  it("rejects out-of-range and non-integer ratings", () => {
    expect(() => validateRatings({ ...FULL, acceptance: 6 })).toThrow(/acceptance/);
    expect(() => validateRatings({ ...FULL, education: 0 })).toThrow(/education/);
    expect(() => validateRatings({ ...FULL, involvement: 2.5 })).toThrow(/involvement/);
    expect(validateRatings(FULL)).toEqual(FULL);
  });

  it("refuses an empty question set", () => {
    expect(() => new SurveyFlow([], "s")).toThrow();
  });
});
