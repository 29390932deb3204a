import type { FeedbackRecord, Summary, SurveyQuestion, TraceDoc } from "./types.js";

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private fetcher: FetchLike;
  private base: string;

  constructor(fetcher: FetchLike = fetch.bind(globalThis), base = "") {
    this.fetcher = fetcher;
    this.base = base;
  }

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetcher(this.base + path, init);
    if (!response.ok) {
      const body = await response.text();
      throw new Error(`${path} failed (${response.status}): ${body}`);
    }
    return (await response.json()) as T;
  }

  ask(question: string, explain: boolean): Promise<TraceDoc> {
    return this.json<TraceDoc>("/api/ask", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ question, explain }),
    });
  }

  submitFeedback(record: FeedbackRecord): Promise<{ id: string }> {
    return this.json<{ id: string }>("/api/feedback", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(record),
    });
  }

  surveyQuestions(): Promise<SurveyQuestion[]> {
    return this.json<{ questions: SurveyQuestion[] }>("/api/questions").then((d) => d.questions);
  }

  summary(): Promise<Summary> {
    return this.json<Summary>("/api/survey/summary");
  }
}
