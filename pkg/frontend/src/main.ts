import { ApiClient } from "./api.js";
import { renderAskResult, traceViewModel, answerText } from "./ask.js";
import { chartModel, renderGroupedBars } from "./chart.js";
import { SurveyFlow, newSessionId } from "./survey.js";
import { DIMENSIONS } from "./types.js";
import type { Dimension, Ratings, SurveyQuestion } from "./types.js";

const api = new ApiClient();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

// --- tabs -------------------------------------------------------------

function showTab(name: "ask" | "survey" | "results"): void {
  for (const tab of ["ask", "survey", "results"]) {
    el(`view-${tab}`).hidden = tab !== name;
    el(`tab-${tab}`).classList.toggle("active", tab === name);
  }
  if (name === "results") {
    void renderResults();
  }
}

// --- ask view -----------------------------------------------------------

async function runAsk(): Promise<void> {
  const input = el<HTMLInputElement>("ask-input");
  const question = input.value.trim();
  if (!question) return;
  const button = el<HTMLButtonElement>("ask-button");
  const output = el("ask-output");
  button.disabled = true;
  output.textContent = "thinking...";
  try {
    const explain = el<HTMLInputElement>("ask-explain").checked;
    const trace = await api.ask(question, explain);
    renderAskResult(output, traceViewModel(trace));
  } catch (error) {
    output.textContent = String(error);
  } finally {
    // the question stays editable for reformulation
    button.disabled = false;
  }
}

// --- survey view ---------------------------------------------------------

let flow: SurveyFlow | null = null;

function ratingInputs(): Partial<Ratings> {
  const ratings: Partial<Ratings> = {};
  for (const dim of DIMENSIONS) {
    const checked = document.querySelector<HTMLInputElement>(
      `input[name="rate-${dim}"]:checked`
    );
    if (checked) ratings[dim as Dimension] = Number(checked.value);
  }
  return ratings;
}

function clearRatings(): void {
  document
    .querySelectorAll<HTMLInputElement>("#survey-form input[type=radio]")
    .forEach((node) => (node.checked = false));
}

async function renderSurveyStep(): Promise<void> {
  if (!flow) return;
  const status = el("survey-status");
  const panel = el("survey-panel");
  if (flow.finished) {
    status.textContent = `Survey complete: ${flow.submitted.length} ratings submitted. Thank you!`;
    panel.hidden = true;
    return;
  }
  const step = flow.current;
  panel.hidden = false;
  status.textContent = `Phase ${step.phase} (${
    step.mode === "without_explanation" ? "answers only" : "answers with explanations"
  }) — question ${step.index + 1} of ${step.total}`;
  el("survey-question").textContent = step.question.question;
  const answerBox = el("survey-answer");
  answerBox.textContent = "loading answer...";
  try {
    const trace = await api.ask(step.question.question, step.mode === "with_explanation");
    if (step.mode === "with_explanation") {
      renderAskResult(answerBox, traceViewModel(trace));
    } else {
      answerBox.textContent = `Answer: ${answerText(trace.final_answer)}`;
    }
  } catch (error) {
    answerBox.textContent = String(error);
  }
}

async function startSurvey(): Promise<void> {
  const questions: SurveyQuestion[] = await api.surveyQuestions();
  flow = new SurveyFlow(questions, newSessionId());
  el("survey-start").hidden = true;
  clearRatings();
  await renderSurveyStep();
}

async function submitSurveyStep(): Promise<void> {
  if (!flow || flow.finished) return;
  const error = el("survey-error");
  try {
    const record = flow.submit(ratingInputs());
    error.textContent = "";
    await api.submitFeedback(record);
  } catch (failure) {
    error.textContent = String(failure instanceof Error ? failure.message : failure);
    return; // incomplete ratings block navigation
  }
  clearRatings();
  await renderSurveyStep();
}

// --- results view ------------------------------------------------------------

async function renderResults(): Promise<void> {
  const summary = await api.summary();
  const host = el("charts");
  host.textContent = "";
  for (const dim of DIMENSIONS) {
    const section = document.createElement("section");
    const heading = document.createElement("h3");
    heading.textContent = dim;
    section.appendChild(heading);
    const box = document.createElement("div");
    section.appendChild(box);
    const model = chartModel(summary, dim as Dimension);
    renderGroupedBars(box, model);
    const means = document.createElement("p");
    means.className = "means";
    means.textContent = model.series
      .map((s) => `${s.label}: mean ${s.mean === null ? "n/a" : s.mean.toFixed(2)} `)
      .join(" | ");
    section.appendChild(means);
    host.appendChild(section);
  }
}

// --- wiring --------------------------------------------------------------------

export function init(): void {
  el("tab-ask").addEventListener("click", () => showTab("ask"));
  el("tab-survey").addEventListener("click", () => showTab("survey"));
  el("tab-results").addEventListener("click", () => showTab("results"));
  el("ask-button").addEventListener("click", () => void runAsk());
  el<HTMLInputElement>("ask-input").addEventListener("keydown", (event) => {
    if (event.key === "Enter") void runAsk();
  });
  el("survey-start").addEventListener("click", () => void startSurvey());
  el("survey-submit").addEventListener("click", () => void submitSurveyStep());
  showTab("ask");
}

if (typeof document !== "undefined" && document.getElementById("tab-ask")) {
  init();
}
