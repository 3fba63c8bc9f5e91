/** Thin typed client for the grading service. */

import type { AttemptResult, QuestionSummary } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

/** 422 from the service: the response text does not lex. */
export class LexErrorResponse extends Error {
  constructor(
    message: string,
    readonly position: number,
  ) {
    super(message);
  }
}

export async function fetchQuestions(): Promise<QuestionSummary[]> {
  const res = await fetch("/api/questions");
  if (!res.ok) throw new ApiError(res.status, `failed to load questions (${res.status})`);
  return (await res.json()) as QuestionSummary[];
}

export async function submitAttempt(
  questionId: string,
  response: string,
): Promise<AttemptResult> {
  const res = await fetch(
    `/api/questions/${encodeURIComponent(questionId)}/attempts`,
    {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ response }),
    },
  );
  if (res.status === 422) {
    const body = (await res.json()) as { error: string; position: number };
    throw new LexErrorResponse(body.error, body.position);
  }
  if (!res.ok) throw new ApiError(res.status, `submission failed (${res.status})`);
  return (await res.json()) as AttemptResult;
}
