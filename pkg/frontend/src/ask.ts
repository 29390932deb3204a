// Ask view: the trace is turned into a flat view model first (testable),
// then rendered into explanation cards with class badges.

import type { AskAnswer, OutcomeClass, StageDoc, TraceDoc } from "./types.js";

export interface ExplanationCard {
  stage: string;
  task: string;
  outcomeClass: OutcomeClass;
  text: string;
  mismatch: boolean;
}

export interface AskViewModel {
  question: string;
  answerText: string;
  stages: { name: string; outcomeClass: OutcomeClass }[];
  cards: ExplanationCard[];
}

export function answerText(answer: AskAnswer | null): string {
  if (answer === null) {
    return "no answer";
  }
  if (answer.form === "ASK") {
    return answer.value ? "true" : "false";
  }
  const rows = answer.rows ?? [];
  if (rows.length === 0) {
    return "no result";
  }
  return rows.map((row) => row.join(" ")).join(", ");
}

export function traceViewModel(trace: TraceDoc): AskViewModel {
  const cards: ExplanationCard[] = [];
  for (const stage of trace.stages) {
    for (const explanation of stage.explanations ?? []) {
      cards.push({
        stage: stage.stage,
        task: stage.task,
        outcomeClass: explanation.class,
        text: explanation.text,
        mismatch: explanation.mismatch,
      });
    }
  }
  return {
    question: trace.question.text,
    answerText: answerText(trace.final_answer),
    stages: trace.stages.map((s: StageDoc) => ({ name: s.stage, outcomeClass: s.effective_class })),
    cards,
  };
}

export function renderAskResult(container: HTMLElement, model: AskViewModel): void {
  container.textContent = "";

  const answer = document.createElement("div");
  answer.className = "answer";
  answer.textContent = `Answer: ${model.answerText}`;
  container.appendChild(answer);

  const badges = document.createElement("div");
  badges.className = "stage-badges";
  for (const stage of model.stages) {
    const badge = document.createElement("span");
    badge.className = `badge badge-${stage.outcomeClass}`;
    badge.textContent = `${stage.name}: ${stage.outcomeClass}`;
    badges.appendChild(badge);
  }
  container.appendChild(badges);

  for (const card of model.cards) {
    const div = document.createElement("div");
    div.className = `card card-${card.outcomeClass}`;
    const head = document.createElement("div");
    head.className = "card-head";
    head.textContent = card.stage + (card.mismatch ? " (corrected)" : "");
    const body = document.createElement("p");
    body.textContent = card.text;
    div.appendChild(head);
    div.appendChild(body);
    container.appendChild(div);
  }
}
