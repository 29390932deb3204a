// Mirrors of the documents the HTTP API serves.

export type OutcomeClass = "Success" | "NoAnswer" | "WrongAnswer";
export type Mode = "with_explanation" | "without_explanation";

export const DIMENSIONS = ["justification", "education", "involvement", "acceptance"] as const;
export type Dimension = (typeof DIMENSIONS)[number];

export interface Explanation {
  template_id: string;
  class: OutcomeClass;
  text: string;
  mismatch: boolean;
}

export interface StageDoc {
  task: "NED" | "RL" | "QB";
  stage: string;
  empty: boolean;
  predicted_class: OutcomeClass;
  probabilities: number[];
  effective_class: OutcomeClass;
  mismatch: boolean;
  output: Record<string, unknown>;
  explanations?: Explanation[];
  wall_time_ms?: number;
}

export interface AskAnswer {
  form: "ASK" | "SELECT";
  value?: boolean;
  variables?: string[];
  rows?: string[][];
}

export interface TraceDoc {
  question: { id: string; text: string };
  features: { schema: string[]; values: number[] };
  stages: StageDoc[];
  final_answer: AskAnswer | null;
}

export type Ratings = Record<Dimension, number>;

export interface FeedbackRecord {
  session_id: string;
  question_id: string;
  mode: Mode;
  ratings: Ratings;
}

export interface SurveyQuestion {
  id: string;
  question: string;
}

export interface SummaryCell {
  histogram: number[];
  count: number;
  mean: number | null;
}

export type Summary = Record<Dimension, Record<Mode, SummaryCell>>;
