// Two-phase survey state machine. Phase 1 shows every question without
// explanations, phase 2 repeats the same questions with explanations.
// The machine itself is DOM-free so the protocol is unit-testable.

import { DIMENSIONS } from "./types.js";
import type { FeedbackRecord, Mode, Ratings, SurveyQuestion } from "./types.js";

export interface SurveyStep {
  question: SurveyQuestion;
  mode: Mode;
  phase: 1 | 2;
  index: number; // 0-based within the whole run
  total: number;
}

export function validateRatings(ratings: Partial<Ratings>): Ratings {
  const clean: Partial<Ratings> = {};
  for (const dim of DIMENSIONS) {
    const value = ratings[dim];
    if (typeof value !== "number" || !Number.isInteger(value) || value < 1 || value > 5) {
      throw new Error(`rating "${dim}" must be an integer between 1 and 5`);
    }
    clean[dim] = value;
  }
  return clean as Ratings;
}

export class SurveyFlow {
  readonly sessionId: string;
  private questions: SurveyQuestion[];
  private position = 0;
  readonly submitted: FeedbackRecord[] = [];

  constructor(questions: SurveyQuestion[], sessionId: string) {
    if (questions.length === 0) {
      throw new Error("survey needs at least one question");
    }
    this.questions = [...questions];
    this.sessionId = sessionId;
  }

  get total(): number {
    return this.questions.length * 2;
  }

  get finished(): boolean {
    return this.position >= this.total;
  }

  get current(): SurveyStep {
    if (this.finished) {
      throw new Error("survey already finished");
    }
    const phase: 1 | 2 = this.position < this.questions.length ? 1 : 2;
    const mode: Mode = phase === 1 ? "without_explanation" : "with_explanation";
    const question = this.questions[this.position % this.questions.length];
    return { question, mode, phase, index: this.position, total: this.total };
  }

  // Valid ratings advance the flow and yield the record to send; anything
  // else throws and the position does not move.
  submit(ratings: Partial<Ratings>): FeedbackRecord {
    const step = this.current;
    const record: FeedbackRecord = {
      session_id: this.sessionId,
      question_id: step.question.id,
      mode: step.mode,
      ratings: validateRatings(ratings),
    };
    this.submitted.push(record);
    this.position += 1;
    return record;
  }
}

export function newSessionId(): string {
  return "s-" + Math.random().toString(36).slice(2, 10) + Date.now().toString(36);
}
